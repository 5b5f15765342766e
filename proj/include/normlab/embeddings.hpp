#pragma once

#include <vector>

#include "normlab/interval.hpp"
#include "normlab/number_field.hpp"

namespace normlab {

struct RootEnclosure {
  ComplexInterval value;
  bool real = false;
};

// All complex roots of a squarefree polynomial: real roots ascending, then
// each complex root with positive imaginary part followed by its conjugate.
// Every enclosure has radius <= 2^-prec and isolates exactly one root.
struct RootSet {
  std::vector<RootEnclosure> roots;
  int real_count = 0;
  int complex_pairs = 0;
};

// Errors: NOT_SQUAREFREE; PRECISION_LOSS if the roots cannot be separated.
RootSet polynomial_roots(RatPolynomial const& p, int prec);

// The n embeddings theta_i of K, as images of t. Errors: INVALID_ARGUMENT
// for prec < 16.
RootSet real_embeddings(NumberField const& field, int prec);

bool is_totally_real(NumberField const& field);

}  // namespace normlab
