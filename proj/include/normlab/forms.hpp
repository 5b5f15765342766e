#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "normlab/form.hpp"
#include "normlab/number_field.hpp"
#include "normlab/place.hpp"

namespace normlab {

// N_{K/Q}(x1 + x2 t + ... + xn t^{n-1}) = det(sum_j x_j mul_matrix(t^{j-1})).
Form<Rational> norm_form(NumberField const& field);

// a x^2 + b x y + c y^2
struct BinaryQuadratic {
  Rational a;
  Rational b;
  Rational c;

  Rational discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(BinaryQuadratic const&, BinaryQuadratic const&) = default;
};

std::string to_string(BinaryQuadratic const& q);
// "a,b,c"
BinaryQuadratic parse_binary_quadratic(std::string const& text);

struct AnisotropyCertificate {
  bool anisotropic = false;
  std::string reason;  // e.g. "disc 8: v_3 = 0, (8/3) = -1"
};

// Anisotropic iff the discriminant is a non-square in Q_v.
AnisotropyCertificate is_anisotropic(BinaryQuadratic const& q, Place const& v);

// x^2 + y^2 at infinity, x^2 - u y^2 with u the least non-residue at odd p,
// x^2 - 5 y^2 at 2.
BinaryQuadratic anisotropic_binary(Place const& v);

struct QuasiChoice {
  Place place;
  std::vector<BinaryQuadratic> q;  // one per local factor, in factor order
};

enum class FormKind { kNorm, kQuasi, kGiven };

std::string to_string(FormKind kind);

// One f_v. Exactly one of real/padic may be set, alongside an exact form
// whenever the component has (certified) rational coefficients.
struct FormComponent {
  Place place;
  std::optional<Form<Rational>> exact;
  std::optional<Form<Interval>> real;
  std::optional<Form<PAdic>> padic;
};

struct SForm {
  std::vector<Place> places;
  std::vector<FormComponent> components;
  FormKind kind = FormKind::kGiven;
  std::vector<Integer> field;  // defining polynomial when built from a field
  std::vector<QuasiChoice> q_choices;

  int nvars() const;
  int degree() const;
  // The common rational form when every component is the same exact form.
  std::optional<Form<Rational>> global_form() const;
};

// Every component equal to f.
SForm make_sform(Form<Rational> const& f, std::vector<Place> const& places,
                 FormKind kind = FormKind::kGiven);

SForm norm_sform(Field const& field, std::vector<Place> const& places);

struct QuasiOptions {
  int precision_bits = 128;
  int padic_digits = kDefaultPadicDigits;
};

// Quasi-norm form in n = 2s variables, x = (x_1..x_s | x_{s+1}..x_n).
// Missing entries of q_choices take anisotropic_binary defaults.
// Errors: NOT_TOTALLY_REAL, RAMIFIED_PRIME, ANISOTROPY_FAILURE,
// DIMENSION_MISMATCH (wrong number of q at a place).
SForm quasi_norm_form(Field const& field, std::vector<Place> const& places,
                      std::vector<QuasiChoice> const& q_choices = {},
                      QuasiOptions const& options = {});

// Applies g to every component.
SForm apply_gl(RationalMatrix const& g, SForm const& f);

// f_v(x) at one place.
struct PlaceValue {
  Place place;
  std::variant<Rational, Interval, PAdic> value;

  bool is_exact() const { return std::holds_alternative<Rational>(value); }
  // Certainly zero (exact zero) / possibly zero (enclosure meets zero).
  bool certainly_zero() const;
  bool possibly_zero() const;
  // |value|_v as an enclosure; exact values give point intervals.
  Interval abs_enclosure() const;
  // |value|_v when it is known exactly; PRECISION_LOSS otherwise.
  Rational exact_abs() const;
  bool abs_is_exact() const;
};

std::vector<PlaceValue> evaluate(SForm const& f, RationalVector const& x,
                                 int padic_digits = kDefaultPadicDigits);

}  // namespace normlab
