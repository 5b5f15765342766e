#include "normlab/forms.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "normlab/embeddings.hpp"
#include "normlab/linalg.hpp"
#include "normlab/local_field.hpp"

namespace normlab {
namespace {

// Linear form sum_k coeffs[k] x_{offset+k} in nvars variables.
template <typename S>
Form<S> embedded_linear(std::vector<S> const& coeffs, int offset, int nvars, S const& zero) {
  std::vector<S> full(nvars, zero);
  for (std::size_t k = 0; k < coeffs.size(); ++k) full[offset + k] = coeffs[k];
  return Form<S>::linear(full);
}

template <typename S>
Form<S> compose_quadratic(BinaryQuadratic const& q, Form<S> const& u, Form<S> const& v,
                          S const& like) {
  auto const lift = [&](Rational const& r) { return ScalarOps<S>::lift(r, like); };
  return lift(q.a) * (u * u) + lift(q.b) * (u * v) + lift(q.c) * (v * v);
}

// det(sum_k x_{offset+k} T_k) for the local multiplication matrices T_k.
Form<Rational> local_norm_form(LocalFactor const& factor, int offset, int nvars) {
  int const d = factor.local_degree;
  std::vector<std::vector<std::vector<Integer>>> powers;
  for (int k = 0; k < d; ++k) powers.push_back(local_power_matrix(factor, k));
  SquareArray<Form<Rational>> m(d, std::vector<Form<Rational>>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> row;
      for (int k = 0; k < d; ++k) row.emplace_back(powers[k][i][j]);
      m[i][j] = embedded_linear(row, offset, nvars, Rational(0));
    }
  }
  return subset_determinant(m, Form<Rational>::constant(nvars, Rational(1)));
}

std::vector<BinaryQuadratic> choices_for(Place const& v, int count,
                                         std::vector<QuasiChoice> const& q_choices) {
  for (auto const& choice : q_choices) {
    if (!(choice.place == v)) continue;
    if (static_cast<int>(choice.q.size()) != count) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "place " + to_string(v) + " has " + std::to_string(count) +
                      " local factors but " + std::to_string(choice.q.size()) +
                      " quadratic forms were given");
    }
    for (auto const& q : choice.q) {
      auto const cert = is_anisotropic(q, v);
      if (!cert.anisotropic) {
        throw Error(ErrorCode::kAnisotropyFailure,
                    to_string(q) + " is isotropic at " + to_string(v) + " (" + cert.reason + ")");
      }
    }
    return choice.q;
  }
  return std::vector<BinaryQuadratic>(count, anisotropic_binary(v));
}

int min_valuation(BinaryQuadratic const& q, Integer const& p) {
  int v = INT_MAX;
  for (auto const& c : {q.a, q.b, q.c}) {
    if (c != 0) v = std::min(v, valuation(c, p));
  }
  return v == INT_MAX ? 0 : v;
}

}  // namespace

Form<Rational> norm_form(NumberField const& field) {
  int const n = field.degree;
  Field const shared = std::make_shared<NumberField>(field);
  std::vector<RationalMatrix> mats;
  for (int j = 0; j < n; ++j) mats.push_back(mul_matrix(field, FieldElement::basis(shared, j)));
  SquareArray<Form<Rational>> m(n, std::vector<Form<Rational>>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.push_back(mats[j](r, c));
      m[r][c] = Form<Rational>::linear(row);
    }
  }
  return subset_determinant(m, Form<Rational>::constant(n, Rational(1)));
}

std::string to_string(BinaryQuadratic const& q) {
  Form<Rational> f(2, 2);
  f.add_term({2, 0}, q.a);
  f.add_term({1, 1}, q.b);
  f.add_term({0, 2}, q.c);
  return to_string(f);
}

BinaryQuadratic parse_binary_quadratic(std::string const& text) {
  std::vector<Rational> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(parse_decimal(item));
  if (parts.size() != 3) throw Error(ErrorCode::kParseError, "quadratic form must be 'a,b,c'");
  return {parts[0], parts[1], parts[2]};
}

AnisotropyCertificate is_anisotropic(BinaryQuadratic const& q, Place const& v) {
  Rational const d = q.discriminant();
  std::string const ds = "disc " + to_string(d);
  if (d == 0) return {false, ds + " is zero"};
  if (v.is_archimedean()) {
    if (d < 0) return {true, ds + " < 0"};
    return {false, ds + " > 0 is a real square"};
  }
  Integer const& p = v.p();
  int const e = valuation(d, p);
  std::string const ve = "v_" + p.str() + " = " + std::to_string(e);
  if (e % 2 != 0) return {true, ds + ": " + ve + " is odd"};
  Rational const u = d / pow(Rational(p), e);
  if (p == 2) {
    Integer const r = mod(numerator(u) * inverse_mod(denominator(u), Integer(8)), Integer(8));
    if (r == 1) return {false, ds + ": " + ve + ", unit = 1 mod 8 is a square"};
    return {true, ds + ": " + ve + ", unit = " + r.str() + " mod 8 is not a square"};
  }
  Integer const r = mod(numerator(u) * inverse_mod(denominator(u), p), p);
  int const l = legendre(r, p);
  std::string const leg = "(" + r.str() + "/" + p.str() + ") = " + std::to_string(l);
  if (l == 1) return {false, ds + ": " + ve + ", " + leg};
  return {true, ds + ": " + ve + ", " + leg};
}

BinaryQuadratic anisotropic_binary(Place const& v) {
  if (v.is_archimedean()) return {1, 0, 1};
  Integer const& p = v.p();
  if (p == 2) return {1, 0, -5};
  Integer u = 2;
  while (legendre(u, p) != -1) ++u;
  return {1, 0, Rational(-u)};
}

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::kNorm:
      return "norm";
    case FormKind::kQuasi:
      return "quasi";
    case FormKind::kGiven:
      return "given";
  }
  return "given";
}

int SForm::nvars() const {
  if (components.empty()) return 0;
  auto const& c = components.front();
  if (c.exact) return c.exact->nvars();
  if (c.real) return c.real->nvars();
  return c.padic->nvars();
}

int SForm::degree() const {
  if (components.empty()) return 0;
  auto const& c = components.front();
  if (c.exact) return c.exact->degree();
  if (c.real) return c.real->degree();
  return c.padic->degree();
}

std::optional<Form<Rational>> SForm::global_form() const {
  if (components.empty() || !components.front().exact) return std::nullopt;
  auto const& f = *components.front().exact;
  for (auto const& c : components) {
    if (!c.exact || c.exact->terms() != f.terms()) return std::nullopt;
  }
  return f;
}

SForm make_sform(Form<Rational> const& f, std::vector<Place> const& places, FormKind kind) {
  SForm out;
  out.places = places;
  out.kind = kind;
  for (auto const& v : places) {
    FormComponent c;
    c.place = v;
    c.exact = f;
    out.components.push_back(std::move(c));
  }
  return out;
}

SForm norm_sform(Field const& field, std::vector<Place> const& places) {
  SForm out = make_sform(norm_form(*field), places, FormKind::kNorm);
  out.field = field->coefficients;
  return out;
}

SForm quasi_norm_form(Field const& field, std::vector<Place> const& places,
                      std::vector<QuasiChoice> const& q_choices, QuasiOptions const& options) {
  if (!is_totally_real(*field)) {
    throw Error(ErrorCode::kNotTotallyReal, "quasi-norm forms need a totally real field");
  }
  for (auto const& choice : q_choices) {
    if (std::find(places.begin(), places.end(), choice.place) == places.end()) {
      throw Error(ErrorCode::kInvalidArgument, "quadratic forms given for a place outside S");
    }
  }
  int const s = field->degree;
  int const n = 2 * s;
  SForm out;
  out.places = places;
  out.kind = FormKind::kQuasi;
  out.field = field->coefficients;
  for (auto const& v : places) {
    FormComponent comp;
    comp.place = v;
    if (v.is_archimedean()) {
      auto const qs = choices_for(v, s, q_choices);
      out.q_choices.push_back({v, qs});
      PrecisionGuard guard(options.precision_bits + 32);
      auto const roots = real_embeddings(*field, options.precision_bits + 16);
      Interval const zero(0);
      Form<Interval> f = Form<Interval>::constant(n, Interval(1));
      for (int i = 0; i < s; ++i) {
        Interval const& theta = roots.roots[i].value.re();
        std::vector<Interval> coeffs{Interval(1)};
        for (int j = 1; j < s; ++j) coeffs.push_back(coeffs.back() * theta);
        auto const u = embedded_linear(coeffs, 0, n, zero);
        auto const w = embedded_linear(coeffs, s, n, zero);
        f = f * compose_quadratic(qs[i], u, w, zero);
      }
      if (std::all_of(qs.begin(), qs.end(), [&](auto const& q) { return q == qs.front(); })) {
        // Symmetric in the conjugates, hence rational with bounded denominator.
        Integer den = 1;
        for (auto const& c : {qs[0].a, qs[0].b, qs[0].c}) den = boost::multiprecision::lcm(den, denominator(c));
        comp.exact = snap_to_rational(f, pow(den, static_cast<unsigned>(s)));
      }
      comp.real = std::move(f);
    } else {
      Integer const& p = v.p();
      auto const factors = padic_factor_degrees(*field, p, options.padic_digits);
      auto const qs = choices_for(v, static_cast<int>(factors.size()), q_choices);
      out.q_choices.push_back({v, qs});
      Form<Rational> f = Form<Rational>::constant(n, Rational(1));
      int A = options.padic_digits;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto const u = local_norm_form(factors[i], 0, n);
        auto const w = local_norm_form(factors[i], s, n);
        f = f * compose_quadratic(qs[i], u, w, Rational(0));
        A += std::min(0, min_valuation(qs[i], p));
      }
      if (A < 2) throw Error(ErrorCode::kPrecisionLoss, "too few p-adic digits for these quadratic forms");
      comp.padic = f.map_coefficients([&](Rational const& c) {
        return PAdic::from_rational(c, p, A + 8).with_absolute_precision(A);
      });
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

SForm apply_gl(RationalMatrix const& g, SForm const& f) {
  SForm out = f;
  for (auto& c : out.components) {
    if (c.exact) c.exact = apply_gl(g, *c.exact);
    if (c.real) c.real = apply_gl(g, *c.real);
    if (c.padic) c.padic = apply_gl(g, *c.padic);
  }
  return out;
}

bool PlaceValue::certainly_zero() const {
  if (auto const* r = std::get_if<Rational>(&value)) return *r == 0;
  if (auto const* x = std::get_if<Interval>(&value)) return x->is_point() && x->contains_zero();
  return std::get<PAdic>(value).is_exact_zero();
}

bool PlaceValue::possibly_zero() const {
  if (auto const* r = std::get_if<Rational>(&value)) return *r == 0;
  if (auto const* x = std::get_if<Interval>(&value)) return x->contains_zero();
  return std::get<PAdic>(value).is_zero();
}

bool PlaceValue::abs_is_exact() const {
  if (std::holds_alternative<Rational>(value)) return true;
  if (auto const* x = std::get_if<PAdic>(&value)) {
    return x->is_exact_zero() || (!x->is_zero() && x->relative_precision() >= 2);
  }
  return false;
}

Rational PlaceValue::exact_abs() const {
  if (auto const* r = std::get_if<Rational>(&value)) return normalized_abs(*r, place);
  if (auto const* x = std::get_if<PAdic>(&value)) return x->normalized_abs();
  throw Error(ErrorCode::kPrecisionLoss, "archimedean value is only known as an enclosure");
}

Interval PlaceValue::abs_enclosure() const {
  if (auto const* x = std::get_if<Interval>(&value)) return abs(*x);
  return Interval(exact_abs());
}

std::vector<PlaceValue> evaluate(SForm const& f, RationalVector const& x, int padic_digits) {
  std::vector<PlaceValue> out;
  for (auto const& c : f.components) {
    if (c.exact) {
      out.push_back({c.place, evaluate(*c.exact, x)});
    } else if (c.real) {
      out.push_back({c.place, evaluate(*c.real, x)});
    } else {
      // Monomials absent from the stored form are only known to vanish to
      // the coefficients' absolute precision; cap the value accordingly.
      int A = INT_MAX;
      for (auto const& [m, coeff] : c.padic->terms()) A = std::min(A, coeff.absolute_precision());
      int vx = INT_MAX;
      for (int i = 0; i < x.size(); ++i) {
        if (x[i] != 0) vx = std::min(vx, valuation(x[i], c.place.p()));
      }
      PAdic value = PAdic::exact_zero(c.place.p());
      if (vx != INT_MAX) {
        value = evaluate(*c.padic, x, padic_digits);
        if (A != INT_MAX) value = value.with_absolute_precision(A + c.padic->degree() * vx);
      }
      out.push_back({c.place, value});
    }
  }
  return out;
}

}  // namespace normlab
