#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normlab/interval.hpp"

namespace normlab {

// alpha = (a + b sqrt(D)) / c with D > 0 squarefree-or-not, c != 0.
struct QuadraticIrrational {
  Rational a = 0;
  Rational b = 1;
  Integer D = 5;
  Rational c = 1;

  Interval value() const;
  // alpha^2 = r + s sqrt(D); exact when s == 0 or D is a square.
  std::optional<Rational> exact_square() const;
  Interval square() const;
  std::string describe() const;
};

// "golden", "sqrt:D", "quad:a,b,D,c". Errors: PARSE_ERROR.
QuadraticIrrational parse_alpha(std::string const& text);

// Minimum of |q| over nonzero integer points of height <= H for
// q = x^2 - alpha^2 y^2 (vars = 2) or x^2 + y^2 - alpha^2 z^2 (vars = 3),
// by exact pruning in the first coordinate.
struct OppenheimRow {
  long height = 0;
  Interval min_abs;
  RationalVector point;
  // The same restricted to points whose last coordinate is nonzero.
  Interval min_abs_last_nonzero;
  RationalVector point_last_nonzero;
  std::uint64_t evaluated = 0;
  std::uint64_t zeros = 0;
};

OppenheimRow oppenheim_min(QuadraticIrrational const& alpha, int vars, long H);

}  // namespace normlab
