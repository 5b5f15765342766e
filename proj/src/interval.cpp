#include "normlab/interval.hpp"

#include <algorithm>
#include <cmath>

#include "normlab/error.hpp"

namespace normlab {
namespace {

thread_local int g_precision = 128;

void set_rational(mpfr_t target, Rational const& q, mpfr_rnd_t rnd) {
  mpfr_set_q(target, q.backend().data(), rnd);
}

Rational get_rational(mpfr_t const source) {
  if (!mpfr_number_p(source)) {
    throw Error(ErrorCode::kPrecisionLoss, "interval endpoint is not finite");
  }
  Rational r;
  mpfr_get_q(r.backend().data(), source);
  return r;
}

int joint(Interval const& a, Interval const& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

int default_precision() { return g_precision; }

PrecisionGuard::PrecisionGuard(int bits) : saved_(g_precision) {
  if (bits < MPFR_PREC_MIN || bits > (1 << 20)) {
    throw Error(ErrorCode::kInvalidArgument, "precision out of range");
  }
  g_precision = bits;
}

PrecisionGuard::~PrecisionGuard() { g_precision = saved_; }

Interval::Interval(int bits, bool) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

Interval::Interval() : Interval(g_precision, true) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(int value) : Interval(static_cast<long>(value)) {}

Interval::Interval(long value) : Interval(g_precision, true) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(double value) : Interval(g_precision, true) {
  mpfr_set_d(lo_, value, MPFR_RNDD);
  mpfr_set_d(hi_, value, MPFR_RNDU);
}

Interval::Interval(Integer const& value) : Interval(Rational(value)) {}

Interval::Interval(Rational const& value) : Interval(g_precision, true) {
  set_rational(lo_, value, MPFR_RNDD);
  set_rational(hi_, value, MPFR_RNDU);
}

Interval::Interval(Rational const& lower, Rational const& upper) : Interval(g_precision, true) {
  if (lower > upper) throw Error(ErrorCode::kInvalidArgument, "interval with lower > upper");
  set_rational(lo_, lower, MPFR_RNDD);
  set_rational(hi_, upper, MPFR_RNDU);
}

Interval::Interval(Interval const& other) : Interval(other.precision(), true) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision(), true) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval const& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.precision());
  mpfr_set_prec(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

int Interval::precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }

Rational Interval::lower() const { return get_rational(lo_); }
Rational Interval::upper() const { return get_rational(hi_); }
Rational Interval::mid() const { return (lower() + upper()) / 2; }
Rational Interval::rad() const { return (upper() - lower()) / 2; }
double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return static_cast<double>(mid()); }

bool Interval::contains(Rational const& x) const { return lower() <= x && x <= upper(); }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::certainly_less(Interval const& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }
bool Interval::overlaps(Interval const& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

std::vector<Integer> Interval::integers_inside(int limit) const {
  Rational const lo = lower();
  Rational const hi = upper();
  Integer first = numerator(lo) / denominator(lo);
  if (Rational(first) < lo) ++first;
  std::vector<Integer> out;
  for (Integer k = first; Rational(k) <= hi && static_cast<int>(out.size()) < limit; ++k) out.push_back(k);
  return out;
}

Interval& Interval::operator+=(Interval const& other) { return *this = *this + other; }
Interval& Interval::operator-=(Interval const& other) { return *this = *this - other; }
Interval& Interval::operator*=(Interval const& other) { return *this = *this * other; }
Interval& Interval::operator/=(Interval const& other) { return *this = *this / other; }

Interval operator-(Interval const& a) {
  Interval r(a.precision(), true);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator+(Interval const& a, Interval const& b) {
  Interval r(joint(a, b), true);
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(Interval const& a, Interval const& b) {
  Interval r(joint(a, b), true);
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(Interval const& a, Interval const& b) {
  int const prec = joint(a, b);
  Interval r(prec, true);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr const xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr const ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(Interval const& a, Interval const& b) {
  if (b.contains_zero()) throw Error(ErrorCode::kPrecisionLoss, "division by an interval containing zero");
  Interval inv(b.precision(), true);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval sqr(Interval const& a) {
  Interval const m = abs(a);
  Interval r(a.precision(), true);
  mpfr_sqr(r.lo_, m.lo_, MPFR_RNDD);
  mpfr_sqr(r.hi_, m.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(Interval const& a) {
  if (a.certainly_negative()) throw Error(ErrorCode::kInvalidArgument, "square root of a negative interval");
  Interval r(a.precision(), true);
  if (mpfr_sgn(a.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp(Interval const& a) {
  Interval r(a.precision(), true);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log(Interval const& a) {
  if (!a.certainly_positive()) throw Error(ErrorCode::kPrecisionLoss, "logarithm of an interval not certainly positive");
  Interval r(a.precision(), true);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval root(Interval const& a, unsigned n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "zeroth root");
  if (n == 1) return a;
  if (a.certainly_negative()) throw Error(ErrorCode::kInvalidArgument, "root of a negative interval");
  Interval r(a.precision(), true);
  if (mpfr_sgn(a.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_rootn_ui(r.lo_, a.lo_, n, MPFR_RNDD);
  }
  mpfr_rootn_ui(r.hi_, a.hi_, n, MPFR_RNDU);
  return r;
}

Interval pow(Interval const& a, int n) {
  if (n < 0) return Interval(1) / pow(a, -n);
  if (n == 0) return Interval(1);
  Interval const base = (n % 2 == 0) ? abs(a) : a;
  Interval r(a.precision(), true);
  mpfr_pow_ui(r.lo_, base.lo_, static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_pow_ui(r.hi_, base.hi_, static_cast<unsigned long>(n), MPFR_RNDU);
  return r;
}

Interval abs(Interval const& a) {
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  Interval r(a.precision(), true);
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  if (mpfr_greater_p(a.hi_, r.hi_)) mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval max(Interval const& a, Interval const& b) {
  Interval r(joint(a, b), true);
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(Interval const& a, Interval const& b) {
  Interval r(joint(a, b), true);
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval hull(Interval const& a, Interval const& b) {
  Interval r(joint(a, b), true);
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::with_precision(int bits) const {
  Interval r(bits, true);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool identical(Interval const& a, Interval const& b) {
  return mpfr_equal_p(a.lo_, b.lo_) && mpfr_equal_p(a.hi_, b.hi_);
}

Interval interval_sqrt(Rational const& x) { return sqrt(Interval(x)); }

std::string decimal_string(Rational const& x, int digits, int direction) {
  if (digits < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one digit");
  if (x == 0) return "0";
  Rational const ax = abs(x);
  // Decimal exponent e with 10^e <= |x| < 10^{e+1}.
  long e = static_cast<long>(msb(numerator(ax))) - static_cast<long>(msb(denominator(ax)));
  e = static_cast<long>(std::floor(static_cast<double>(e) * 0.30102999566398120));
  auto const ten_pow = [](long k) {
    Rational const t{pow(Integer(10), static_cast<unsigned>(k < 0 ? -k : k))};
    return k < 0 ? Rational(1) / t : t;
  };
  while (ten_pow(e) > ax) --e;
  while (ten_pow(e + 1) <= ax) ++e;
  Rational const scaled = x * ten_pow(digits - 1 - e);
  Integer q = numerator(scaled) / denominator(scaled);  // truncates toward zero
  Rational const frac = scaled - Rational(q);
  if (frac != 0) {
    if (direction > 0 && frac > 0) ++q;
    if (direction < 0 && frac < 0) --q;
    if (direction == 0) {
      if (abs(frac) * 2 >= 1) q += (frac > 0) ? 1 : -1;
    }
  }
  std::string s = abs(q).str();
  // Rounding may carry into an extra digit (e.g. 9.99 -> 10.0).
  if (static_cast<int>(s.size()) > digits) {
    ++e;
    s.pop_back();
  }
  std::string out = (q < 0) ? "-" : "";
  out += s.substr(0, 1);
  std::string tail = s.substr(1);
  while (!tail.empty() && tail.back() == '0') tail.pop_back();
  if (!tail.empty()) out += "." + tail;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

DecimalBall to_decimal_ball(Interval const& x, int digits) {
  Rational const m = x.mid();
  std::string const mid_text = decimal_string(m, digits, 0);
  Rational const r = x.rad() + abs(parse_decimal(mid_text) - m);
  return {mid_text, r == 0 ? "0" : decimal_string(r, 3, 1)};
}

Interval from_decimal_ball(DecimalBall const& ball) {
  Rational const m = parse_decimal(ball.mid);
  Rational const r = parse_decimal(ball.rad);
  if (r < 0) throw Error(ErrorCode::kParseError, "negative radius");
  return Interval(m - r, m + r);
}

std::string to_string(Interval const& x) {
  return "[" + decimal_string(x.lower(), 10, -1) + ", " + decimal_string(x.upper(), 10, 1) + "]";
}

}  // namespace normlab
