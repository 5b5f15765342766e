#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "normlab/error.hpp"
#include "normlab/types.hpp"

namespace normlab {

// Dense univariate polynomial, coefficients in ascending degree. The zero
// polynomial has no coefficients and degree -1.
template <typename Scalar>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  static UPoly constant(Scalar c) { return UPoly(std::vector<Scalar>{std::move(c)}); }
  static UPoly monomial(Scalar c, int degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = std::move(c);
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Scalar const& leading() const { return coefficients_.back(); }
  std::vector<Scalar> const& coefficients() const { return coefficients_; }

  Scalar coefficient(int i) const {
    return i >= 0 && i <= degree() ? coefficients_[i] : Scalar(0);
  }

  template <typename T>
  T operator()(T const& x) const {
    T result = T(0);
    for (int i = degree(); i >= 0; --i) {
      result = result * x + T(coefficients_[i]);
    }
    return result;
  }

  friend bool operator==(UPoly const& a, UPoly const& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
      coefficients_.pop_back();
    }
  }

  std::vector<Scalar> coefficients_;
};

using RatPolynomial = UPoly<Rational>;

template <typename Scalar>
UPoly<Scalar> operator+(UPoly<Scalar> const& a, UPoly<Scalar> const& b) {
  std::vector<Scalar> c(std::max(a.degree(), b.degree()) + 1, Scalar(0));
  for (int i = 0; i <= a.degree(); ++i) c[i] += a.coefficients()[i];
  for (int i = 0; i <= b.degree(); ++i) c[i] += b.coefficients()[i];
  return UPoly<Scalar>(std::move(c));
}

template <typename Scalar>
UPoly<Scalar> operator-(UPoly<Scalar> const& a) {
  std::vector<Scalar> c = a.coefficients();
  for (auto& x : c) x = -x;
  return UPoly<Scalar>(std::move(c));
}

template <typename Scalar>
UPoly<Scalar> operator-(UPoly<Scalar> const& a, UPoly<Scalar> const& b) {
  return a + (-b);
}

template <typename Scalar>
UPoly<Scalar> operator*(UPoly<Scalar> const& a, UPoly<Scalar> const& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.degree() + b.degree() + 1, Scalar(0));
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return UPoly<Scalar>(std::move(c));
}

template <typename Scalar>
UPoly<Scalar> operator*(Scalar const& s, UPoly<Scalar> const& a) {
  std::vector<Scalar> c = a.coefficients();
  for (auto& x : c) x = s * x;
  return UPoly<Scalar>(std::move(c));
}

template <typename Scalar>
UPoly<Scalar> derivative(UPoly<Scalar> const& a) {
  if (a.degree() <= 0) return {};
  std::vector<Scalar> c(a.degree());
  for (int i = 1; i <= a.degree(); ++i) c[i - 1] = Scalar(i) * a.coefficients()[i];
  return UPoly<Scalar>(std::move(c));
}

// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<UPoly<Scalar>, UPoly<Scalar>> divmod(UPoly<Scalar> const& a,
                                               UPoly<Scalar> const& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  }
  std::vector<Scalar> r = a.coefficients();
  int const db = b.degree();
  if (a.degree() < db) return {UPoly<Scalar>(), a};
  std::vector<Scalar> q(a.degree() - db + 1, Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Scalar const factor = r[i] / b.leading();
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b.coefficients()[j];
  }
  r.resize(db);
  return {UPoly<Scalar>(std::move(q)), UPoly<Scalar>(std::move(r))};
}

template <typename Scalar>
UPoly<Scalar> make_monic(UPoly<Scalar> const& a) {
  if (a.is_zero()) return a;
  return (Scalar(1) / a.leading()) * a;
}

// Monic gcd over a field.
template <typename Scalar>
UPoly<Scalar> gcd(UPoly<Scalar> a, UPoly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RatPolynomial from_integers(std::vector<Integer> const& coefficients);
RatPolynomial from_integers(std::vector<long> const& coefficients);

bool is_squarefree(RatPolynomial const& p);

// res(a, b) = lc(a)^deg(b) * prod_{a(x)=0} b(x), computed as the Sylvester
// determinant.
Rational resultant(RatPolynomial const& a, RatPolynomial const& b);

// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p).
Rational discriminant(RatPolynomial const& p);

std::string to_string(RatPolynomial const& p, std::string_view var = "t");

}  // namespace normlab
