#include "normlab/upoly.hpp"

#include <sstream>

#include "normlab/linalg.hpp"

namespace normlab {

RatPolynomial from_integers(std::vector<Integer> const& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (auto const& x : coefficients) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

RatPolynomial from_integers(std::vector<long> const& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (long x : coefficients) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

bool is_squarefree(RatPolynomial const& p) {
  if (p.degree() <= 0) return !p.is_zero();
  return gcd(p, derivative(p)).degree() == 0;
}

Rational resultant(RatPolynomial const& a, RatPolynomial const& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int const m = a.degree();
  int const n = b.degree();
  if (m == 0) return pow(a.leading(), n);
  if (n == 0) return pow(b.leading(), m);
  int const size = m + n;
  RationalMatrix sylvester = RationalMatrix::Zero(size, size);
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) sylvester(row, row + i) = a.coefficient(m - i);
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) sylvester(n + row, row + i) = b.coefficient(n - i);
  }
  return determinant(sylvester);
}

Rational discriminant(RatPolynomial const& p) {
  int const n = p.degree();
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "discriminant of a constant");
  if (n == 1) return 1;
  Rational r = resultant(p, derivative(p)) / p.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::string to_string(RatPolynomial const& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational const& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Rational const a = abs(c);
    if (a != 1 || i == 0) out << a.str();
    if (i > 0) out << var;
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

}  // namespace normlab
