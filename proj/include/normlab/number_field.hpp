#pragma once

#include <memory>
#include <string>
#include <vector>

#include "normlab/types.hpp"
#include "normlab/upoly.hpp"

namespace normlab {

// How irreducibility of the defining polynomial was established.
struct IrreducibilityCertificate {
  struct PrimePattern {
    Integer prime;
    std::vector<int> degrees;  // factor degrees of the polynomial mod prime
  };
  std::vector<PrimePattern> patterns;
  // Set when degree patterns alone were inconclusive and lifted-factor
  // recombination over Z was needed.
  bool recombination = false;
};

// K = Q[t]/(mu(t)) with the power basis {1, t, ..., t^{n-1}}.
struct NumberField {
  std::vector<Integer> coefficients;  // ascending, monic
  RatPolynomial min_poly;
  int degree = 0;
  Integer disc;
  IrreducibilityCertificate certificate;
};

using Field = std::shared_ptr<NumberField const>;

// Errors: NOT_MONIC, REDUCIBLE (also for non-squarefree input).
Field make_field(std::vector<Integer> const& coefficients);
Field make_field(std::vector<long> const& coefficients);

class FieldElement {
 public:
  FieldElement(Field field, RationalVector coords);

  static FieldElement zero(Field const& field);
  static FieldElement one(Field const& field);
  // t^k reduced to the power basis.
  static FieldElement basis(Field const& field, int k);
  static FieldElement from_polynomial(Field const& field, RatPolynomial const& a);

  Field const& field() const { return field_; }
  RationalVector const& coords() const { return coords_; }
  RatPolynomial polynomial() const;

  friend FieldElement operator+(FieldElement const& a, FieldElement const& b);
  friend FieldElement operator-(FieldElement const& a, FieldElement const& b);
  friend FieldElement operator*(FieldElement const& a, FieldElement const& b);
  friend bool operator==(FieldElement const& a, FieldElement const& b);

 private:
  Field field_;
  RationalVector coords_;
};

// Column j holds the coordinates of a * t^j.
RationalMatrix mul_matrix(NumberField const& field, FieldElement const& a);

// N_{K/Q}(a) = det(mul_matrix(a)).
Rational norm_element(NumberField const& field, FieldElement const& a);

}  // namespace normlab
