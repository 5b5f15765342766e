#pragma once

#include <string>

#include <mpfr.h>

#include "normlab/types.hpp"

namespace normlab {

// Working precision (bits) for intervals built without an explicit one.
int default_precision();

// Sets the default precision for the current thread within a scope.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int bits);
  ~PrecisionGuard();
  PrecisionGuard(PrecisionGuard const&) = delete;
  PrecisionGuard& operator=(PrecisionGuard const&) = delete;

 private:
  int saved_;
};

// Closed real interval [lower, upper] with MPFR endpoints and outward
// rounding: every operation returns an enclosure of the exact result.
class Interval {
 public:
  Interval();
  Interval(int value);  // NOLINT: implicit, so Eigen and templates can lift literals
  Interval(long value);  // NOLINT
  Interval(double value);  // NOLINT
  Interval(Integer const& value);  // NOLINT
  Interval(Rational const& value);  // NOLINT
  Interval(Rational const& lower, Rational const& upper);
  Interval(Interval const& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval const& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  int precision() const;

  // Exact rational endpoints, midpoint and radius.
  Rational lower() const;
  Rational upper() const;
  Rational mid() const;
  Rational rad() const;
  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double mid_double() const;

  bool contains(Rational const& x) const;
  bool contains_zero() const;
  bool is_point() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_nonzero() const { return certainly_positive() || certainly_negative(); }
  bool certainly_less(Interval const& other) const;
  bool overlaps(Interval const& other) const;
  // Integers inside the interval; at most `limit` reported.
  std::vector<Integer> integers_inside(int limit = 2) const;

  Interval& operator+=(Interval const& other);
  Interval& operator-=(Interval const& other);
  Interval& operator*=(Interval const& other);
  Interval& operator/=(Interval const& other);

  friend Interval operator-(Interval const& a);
  friend Interval operator+(Interval const& a, Interval const& b);
  friend Interval operator-(Interval const& a, Interval const& b);
  friend Interval operator*(Interval const& a, Interval const& b);
  // Errors: PRECISION_LOSS when the divisor's enclosure contains zero.
  friend Interval operator/(Interval const& a, Interval const& b);

  friend Interval sqr(Interval const& a);
  friend Interval sqrt(Interval const& a);  // lower end clamped at zero
  friend Interval exp(Interval const& a);
  friend Interval log(Interval const& a);  // PRECISION_LOSS unless a > 0
  friend Interval root(Interval const& a, unsigned n);  // a^{1/n}, a >= 0
  friend Interval pow(Interval const& a, int n);
  friend Interval abs(Interval const& a);
  friend Interval max(Interval const& a, Interval const& b);
  friend Interval min(Interval const& a, Interval const& b);
  friend Interval hull(Interval const& a, Interval const& b);

  // Same interval rounded outward to `bits` of precision.
  Interval with_precision(int bits) const;

  // Equality of both endpoints (bitwise agreement of enclosures).
  friend bool identical(Interval const& a, Interval const& b);

 private:
  explicit Interval(int bits, bool);
  mpfr_t lo_;
  mpfr_t hi_;
};

// Decimal rendering of a rational with `digits` significant digits,
// scientific notation. `direction` < 0 rounds toward -inf, > 0 toward +inf,
// 0 to nearest.
std::string decimal_string(Rational const& x, int digits, int direction = 0);

// {mid, rad} decimal strings whose interval [mid - rad, mid + rad] encloses
// the argument.
struct DecimalBall {
  std::string mid;
  std::string rad;
};
DecimalBall to_decimal_ball(Interval const& x, int digits = 17);
Interval from_decimal_ball(DecimalBall const& ball);

std::string to_string(Interval const& x);

// Enclosures of pi and sqrt(n) etc. are built from these primitives.
Interval interval_sqrt(Rational const& x);

class ComplexInterval {
 public:
  ComplexInterval() = default;
  ComplexInterval(Interval re, Interval im = Interval(0))  // NOLINT
      : re_(std::move(re)), im_(std::move(im)) {}

  Interval const& re() const { return re_; }
  Interval const& im() const { return im_; }

  friend ComplexInterval operator+(ComplexInterval const& a, ComplexInterval const& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexInterval operator-(ComplexInterval const& a, ComplexInterval const& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexInterval operator-(ComplexInterval const& a) { return {-a.re_, -a.im_}; }
  friend ComplexInterval operator*(ComplexInterval const& a, ComplexInterval const& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexInterval operator/(ComplexInterval const& a, ComplexInterval const& b) {
    Interval const d = abs2(b);
    ComplexInterval const n = a * conj(b);
    return {n.re_ / d, n.im_ / d};
  }
  ComplexInterval& operator+=(ComplexInterval const& b) { return *this = *this + b; }
  ComplexInterval& operator*=(ComplexInterval const& b) { return *this = *this * b; }

  friend ComplexInterval conj(ComplexInterval const& a) { return {a.re_, -a.im_}; }
  // Squared modulus, the normalized absolute value at a complex place.
  friend Interval abs2(ComplexInterval const& a) { return sqr(a.re_) + sqr(a.im_); }
  friend Interval abs(ComplexInterval const& a) { return sqrt(abs2(a)); }

 private:
  Interval re_;
  Interval im_;
};

}  // namespace normlab

namespace Eigen {

template <>
struct NumTraits<normlab::Interval> : GenericNumTraits<normlab::Interval> {
  using Real = normlab::Interval;
  using NonInteger = normlab::Interval;
  using Nested = normlab::Interval;
  using Literal = normlab::Interval;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40,
  };
  static inline int digits10() { return 30; }
};

}  // namespace Eigen

namespace normlab {

using IntervalMatrix = Matrix<Interval>;
using IntervalVector = Vector<Interval>;

}  // namespace normlab
