#include "normlab/padic.hpp"

#include <climits>

#include "normlab/error.hpp"

namespace normlab {
namespace {

void check_prime(Integer const& p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, p.str() + " is not prime");
}

void check_same_prime(PAdic const& a, PAdic const& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::kInvalidArgument, "p-adic operands over different primes");
  }
}

}  // namespace

PAdic PAdic::exact_zero(Integer p) {
  PAdic r;
  r.p_ = std::move(p);
  return r;
}

PAdic PAdic::inexact_zero(Integer p, int absolute_precision) {
  PAdic r;
  r.p_ = std::move(p);
  r.exact_zero_ = false;
  r.valuation_ = absolute_precision;
  r.N_ = 0;
  r.unit_ = 0;
  return r;
}

// value * p^valuation known modulo p^absolute_precision.
PAdic PAdic::normalized(Integer const& p, Integer value, int valuation, int absolute_precision) {
  if (absolute_precision <= valuation) return inexact_zero(p, absolute_precision);
  Integer const modulus = pow(p, static_cast<unsigned>(absolute_precision - valuation));
  value = mod(value, modulus);
  if (value == 0) return inexact_zero(p, absolute_precision);
  while (value % p == 0) {
    value /= p;
    ++valuation;
  }
  PAdic r;
  r.p_ = p;
  r.exact_zero_ = false;
  r.valuation_ = valuation;
  r.N_ = absolute_precision - valuation;
  r.unit_ = mod(value, pow(p, static_cast<unsigned>(r.N_)));
  return r;
}

PAdic PAdic::from_rational(Rational const& q, Integer const& p, int N) {
  check_prime(p);
  if (N < 1) throw Error(ErrorCode::kInvalidArgument, "p-adic precision must be positive");
  if (q == 0) return exact_zero(p);
  int const v = normlab::valuation(q, p);
  Rational const u = q / pow(Rational(p), v);
  Integer const modulus = pow(p, static_cast<unsigned>(N));
  PAdic r;
  r.p_ = p;
  r.exact_zero_ = false;
  r.valuation_ = v;
  r.N_ = N;
  r.unit_ = mod(numerator(u) * inverse_mod(denominator(u), modulus), modulus);
  return r;
}

PAdic PAdic::from_residue(Integer const& value, Integer const& p, int absolute_precision) {
  check_prime(p);
  return normalized(p, value, 0, absolute_precision);
}

int PAdic::absolute_precision() const { return exact_zero_ ? INT_MAX : valuation_ + N_; }

PAdic PAdic::with_absolute_precision(int absolute_precision) const {
  if (exact_zero_) return inexact_zero(p_, absolute_precision);
  int const A = std::min(absolute_precision, this->absolute_precision());
  if (is_inexact_zero()) return inexact_zero(p_, A);
  return normalized(p_, unit_, valuation_, A);
}

std::vector<Integer> PAdic::digits() const {
  std::vector<Integer> out;
  Integer u = unit_;
  for (int i = 0; i < N_; ++i) {
    out.push_back(u % p_);
    u /= p_;
  }
  return out;
}

Rational PAdic::representative() const {
  if (is_zero()) return Rational(0);
  return Rational(unit_) * pow(Rational(p_), valuation_);
}

Rational PAdic::normalized_abs() const {
  if (exact_zero_) return Rational(0);
  if (N_ < 2) {
    throw Error(ErrorCode::kPrecisionLoss,
                "p-adic value known to fewer than 2 digits; its absolute value is not certified");
  }
  return pow(Rational(p_), -valuation_);
}

PAdic operator-(PAdic const& a) {
  if (a.is_zero()) return a;
  PAdic r = a;
  r.unit_ = mod(-a.unit_, pow(a.p_, static_cast<unsigned>(a.N_)));
  return r;
}

PAdic operator+(PAdic const& a, PAdic const& b) {
  if (a.exact_zero_) return b;
  if (b.exact_zero_) return a;
  check_same_prime(a, b);
  int const A = std::min(a.absolute_precision(), b.absolute_precision());
  int const v = std::min(a.valuation_, b.valuation_);
  Integer const sum = a.unit_ * pow(a.p_, static_cast<unsigned>(a.valuation_ - v)) +
                      b.unit_ * pow(a.p_, static_cast<unsigned>(b.valuation_ - v));
  return PAdic::normalized(a.p_, sum, v, A);
}

PAdic operator-(PAdic const& a, PAdic const& b) { return a + (-b); }

PAdic operator*(PAdic const& a, PAdic const& b) {
  if (a.exact_zero_) return a;
  if (b.exact_zero_) return b;
  check_same_prime(a, b);
  if (a.is_inexact_zero() || b.is_inexact_zero()) {
    // An inexact zero stores its absolute precision as valuation, so the
    // product vanishes modulo p^(v_a + v_b) in every case.
    return PAdic::inexact_zero(a.p_, a.valuation_ + b.valuation_);
  }
  PAdic r;
  r.p_ = a.p_;
  r.exact_zero_ = false;
  r.valuation_ = a.valuation_ + b.valuation_;
  r.N_ = std::min(a.N_, b.N_);
  r.unit_ = mod(a.unit_ * b.unit_, pow(a.p_, static_cast<unsigned>(r.N_)));
  return r;
}

PAdic PAdic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kPrecisionLoss, "inverse of a p-adic zero");
  PAdic r = *this;
  r.valuation_ = -valuation_;
  r.unit_ = inverse_mod(unit_, pow(p_, static_cast<unsigned>(N_)));
  return r;
}

PAdic operator/(PAdic const& a, PAdic const& b) { return a * b.inverse(); }

bool PAdic::congruent(PAdic const& other) const {
  if (exact_zero_ && other.exact_zero_) return true;
  PAdic const d = *this - other;
  return d.is_zero();
}

std::string to_string(PAdic const& x) {
  if (x.is_exact_zero()) return "0";
  if (x.is_inexact_zero()) return "O(" + x.prime().str() + "^" + std::to_string(x.valuation()) + ")";
  return x.prime().str() + "^" + std::to_string(x.valuation()) + "*" + x.unit().str() + " + O(" +
         x.prime().str() + "^" + std::to_string(x.absolute_precision()) + ")";
}

}  // namespace normlab
