#include "normlab/number_field.hpp"

#include <algorithm>
#include <set>

#include "normlab/error.hpp"
#include "normlab/linalg.hpp"
#include "normlab/modular.hpp"

namespace normlab {
namespace {

std::set<int> subset_sums(std::vector<int> const& degrees) {
  std::set<int> sums{0};
  for (int d : degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

// Integer sqrt rounded up.
Integer ceil_sqrt(Integer const& x) {
  Integer r = sqrt(x);
  if (r * r < x) ++r;
  return r;
}

// Searches for a monic integer factor among products of the p-adically lifted
// factors. Returns the factor or an empty vector.
std::vector<Integer> recombine(std::vector<Integer> const& f, Integer const& p,
                               std::set<int> const& candidate_degrees) {
  int const n = static_cast<int>(f.size()) - 1;
  Integer norm2 = 0;
  for (auto const& c : f) norm2 += c * c;
  Integer const bound = pow(Integer(2), static_cast<unsigned>(n)) * ceil_sqrt(norm2) + 1;
  int precision = 1;
  Integer modulus = p;
  while (modulus <= 2 * bound) {
    modulus *= p;
    ++precision;
  }
  auto const factors_mod_p = modp::factor_squarefree(modp::reduce(f, p), p);
  auto const lifted = modp::hensel_lift(f, factors_mod_p, p, precision);
  int const r = static_cast<int>(lifted.size());
  RatPolynomial const target = from_integers(f);
  for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
    int degree = 0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) degree += modp::degree(lifted[i]);
    }
    if (2 * degree > n || !candidate_degrees.contains(degree)) continue;
    ModPoly product{Integer(1)};
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) product = modp::mul(product, lifted[i], modulus);
    }
    std::vector<Integer> candidate;
    for (auto const& c : product) candidate.push_back(symmetric_mod(c, modulus));
    auto const [quotient, remainder] = divmod(target, from_integers(candidate));
    if (!remainder.is_zero()) continue;
    bool integral = true;
    for (auto const& c : quotient.coefficients()) {
      integral = integral && denominator(c) == 1;
    }
    if (integral) return candidate;
  }
  return {};
}

}  // namespace

Field make_field(std::vector<Integer> const& coefficients) {
  if (coefficients.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "field polynomial must have degree >= 1");
  }
  if (coefficients.back() != 1) {
    throw Error(ErrorCode::kNotMonic, "field polynomial must be monic");
  }
  auto field = std::make_shared<NumberField>();
  field->coefficients = coefficients;
  field->min_poly = from_integers(coefficients);
  field->degree = field->min_poly.degree();
  int const n = field->degree;
  if (n == 1) {
    field->disc = 1;
    return field;
  }
  if (!is_squarefree(field->min_poly)) {
    throw Error(ErrorCode::kReducible,
                "polynomial " + to_string(field->min_poly) + " has a repeated factor");
  }
  field->disc = numerator(discriminant(field->min_poly));

  std::set<int> possible;
  for (int d = 1; d < n; ++d) possible.insert(d);
  Integer p = 2;
  bool certified = false;
  for (int tested = 0; tested < 25 && !certified; p = next_prime(p)) {
    if (field->disc % p == 0) continue;
    ++tested;
    auto degrees = modp::factor_degrees(modp::reduce(coefficients, p), p);
    field->certificate.patterns.push_back({p, degrees});
    auto const sums = subset_sums(degrees);
    std::erase_if(possible, [&](int d) { return !sums.contains(d); });
    certified = degrees.size() == 1 || possible.empty();
  }
  if (!certified) {
    auto const& patterns = field->certificate.patterns;
    auto const best = std::min_element(
        patterns.begin(), patterns.end(), [](auto const& a, auto const& b) {
          return a.degrees.size() < b.degrees.size();
        });
    field->certificate.recombination = true;
    auto const factor = recombine(coefficients, best->prime, possible);
    if (!factor.empty()) {
      throw Error(ErrorCode::kReducible,
                  "polynomial " + to_string(field->min_poly) + " has the factor " +
                      to_string(from_integers(factor)));
    }
  }
  return field;
}

Field make_field(std::vector<long> const& coefficients) {
  std::vector<Integer> c(coefficients.begin(), coefficients.end());
  return make_field(c);
}

FieldElement::FieldElement(Field field, RationalVector coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree) {
    throw Error(ErrorCode::kDimensionMismatch,
                "field element needs " + std::to_string(field_->degree) + " coordinates");
  }
}

FieldElement FieldElement::zero(Field const& field) {
  return FieldElement(field, RationalVector::Zero(field->degree));
}

FieldElement FieldElement::one(Field const& field) { return basis(field, 0); }

FieldElement FieldElement::basis(Field const& field, int k) {
  return from_polynomial(field, RatPolynomial::monomial(Rational(1), k));
}

FieldElement FieldElement::from_polynomial(Field const& field,
                                           RatPolynomial const& a) {
  auto const reduced = divmod(a, field->min_poly).second;
  RationalVector coords = RationalVector::Zero(field->degree);
  for (int i = 0; i <= reduced.degree(); ++i) coords(i) = reduced.coefficients()[i];
  return FieldElement(field, std::move(coords));
}

RatPolynomial FieldElement::polynomial() const {
  return RatPolynomial(std::vector<Rational>(coords_.data(), coords_.data() + coords_.size()));
}

FieldElement operator+(FieldElement const& a, FieldElement const& b) {
  return FieldElement(a.field_, a.coords_ + b.coords_);
}

FieldElement operator-(FieldElement const& a, FieldElement const& b) {
  return FieldElement(a.field_, a.coords_ - b.coords_);
}

FieldElement operator*(FieldElement const& a, FieldElement const& b) {
  return FieldElement::from_polynomial(a.field_, a.polynomial() * b.polynomial());
}

bool operator==(FieldElement const& a, FieldElement const& b) {
  return a.coords_ == b.coords_;
}

RationalMatrix mul_matrix(NumberField const& field, FieldElement const& a) {
  int const n = field.degree;
  RationalMatrix m(n, n);
  RatPolynomial column = a.polynomial();
  RatPolynomial const t = RatPolynomial::monomial(Rational(1), 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = column.coefficient(i);
    column = divmod(column * t, field.min_poly).second;
  }
  return m;
}

Rational norm_element(NumberField const& field, FieldElement const& a) {
  return determinant(mul_matrix(field, a));
}

}  // namespace normlab
