#pragma once

#include <string>
#include <vector>

#include "normlab/types.hpp"

namespace normlab {

inline constexpr int kDefaultPadicDigits = 32;

// x = p^valuation * unit, with unit known modulo p^N (relative precision N).
// Three states: exact zero; inexact zero (x == 0 mod p^valuation, nothing
// more known); and a nonzero value with p not dividing unit.
class PAdic {
 public:
  PAdic() = default;  // exact zero with p = 0; only valid as a placeholder

  static PAdic exact_zero(Integer p);
  static PAdic inexact_zero(Integer p, int absolute_precision);
  // Errors: INVALID_ARGUMENT if p is not prime or N < 1.
  static PAdic from_rational(Rational const& q, Integer const& p, int N = kDefaultPadicDigits);
  // Known modulo p^absolute_precision, e.g. a coefficient computed mod p^N.
  static PAdic from_residue(Integer const& value, Integer const& p, int absolute_precision);

  Integer const& prime() const { return p_; }
  bool is_exact_zero() const { return exact_zero_; }
  bool is_inexact_zero() const { return !exact_zero_ && N_ == 0; }
  bool is_zero() const { return exact_zero_ || N_ == 0; }
  // For an inexact zero this is the absolute precision (a lower bound).
  int valuation() const { return valuation_; }
  int relative_precision() const { return N_; }
  // x is known modulo p^absolute_precision(); exact zero reports INT_MAX.
  int absolute_precision() const;
  Integer const& unit() const { return unit_; }

  // Base-p digits of the unit, least significant first, length N.
  std::vector<Integer> digits() const;
  // The representative p^valuation * unit with 0 <= unit < p^N.
  Rational representative() const;

  // The same value known only modulo p^absolute_precision (never gains
  // precision). An exact zero becomes an inexact zero.
  PAdic with_absolute_precision(int absolute_precision) const;

  // Errors: PRECISION_LOSS on inexact zero or relative precision < 2.
  Rational normalized_abs() const;

  friend PAdic operator-(PAdic const& a);
  friend PAdic operator+(PAdic const& a, PAdic const& b);
  friend PAdic operator-(PAdic const& a, PAdic const& b);
  friend PAdic operator*(PAdic const& a, PAdic const& b);
  // Errors: PRECISION_LOSS when b is zero or an inexact zero.
  friend PAdic operator/(PAdic const& a, PAdic const& b);
  PAdic inverse() const;

  // Agreement to the common absolute precision.
  bool congruent(PAdic const& other) const;
  // Equality of every field; used for determinism checks.
  friend bool operator==(PAdic const& a, PAdic const& b) = default;

 private:
  Integer p_;
  int valuation_ = 0;
  Integer unit_;
  int N_ = 0;
  bool exact_zero_ = true;

  static PAdic normalized(Integer const& p, Integer value, int valuation, int absolute_precision);
};

std::string to_string(PAdic const& x);

}  // namespace normlab
