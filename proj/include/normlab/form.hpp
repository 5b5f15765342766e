#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normlab/error.hpp"
#include "normlab/interval.hpp"
#include "normlab/padic.hpp"
#include "normlab/types.hpp"

namespace normlab {

using Monomial = std::vector<int>;

// Per-scalar hooks used by the generic form code.
template <typename S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static bool is_zero(Rational const& x) { return x == 0; }
  static Rational lift(Rational const& q, Rational const&) { return q; }
};

template <>
struct ScalarOps<Interval> {
  static bool is_zero(Interval const& x) { return x.is_point() && x.contains_zero(); }
  static Interval lift(Rational const& q, Interval const& like) {
    PrecisionGuard guard(like.precision());
    return Interval(q);
  }
};

template <>
struct ScalarOps<PAdic> {
  static bool is_zero(PAdic const& x) { return x.is_exact_zero(); }
  static PAdic lift(Rational const& q, PAdic const& like) {
    int const N = like.is_zero() ? kDefaultPadicDigits : std::max(like.relative_precision(), 2);
    return PAdic::from_rational(q, like.prime(), N);
  }
};

// Homogeneous polynomial in nvars variables. Terms are kept in descending
// lexicographic order of exponents, so x1^n comes first.
template <typename S>
class Form {
 public:
  using Terms = std::map<Monomial, S, std::greater<Monomial>>;

  Form() = default;
  Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static Form constant(int nvars, S c) {
    Form f(nvars, 0);
    f.add_term(Monomial(nvars, 0), std::move(c));
    return f;
  }

  static Form linear(std::vector<S> const& coefficients) {
    int const n = static_cast<int>(coefficients.size());
    Form f(n, 1);
    for (int i = 0; i < n; ++i) {
      Monomial m(n, 0);
      m[i] = 1;
      f.add_term(m, coefficients[i]);
    }
    return f;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Terms const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial const& m, S c) {
    if (static_cast<int>(m.size()) != nvars_) {
      throw Error(ErrorCode::kDimensionMismatch, "monomial has the wrong number of variables");
    }
    int total = 0;
    for (int e : m) total += e;
    if (total != degree_) throw Error(ErrorCode::kInvalidArgument, "form must be homogeneous");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!ScalarOps<S>::is_zero(c)) terms_.emplace(m, std::move(c));
      return;
    }
    it->second = it->second + c;
    if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
  }

  // Coefficient of m, or nullptr when absent.
  S const* coefficient(Monomial const& m) const {
    auto const it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  template <typename F>
  auto map_coefficients(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<S const&>()))>;
    Form<T> out(nvars_, degree_);
    for (auto const& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  friend Form operator+(Form const& a, Form const& b) {
    check_compatible(a, b);
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero()) {
      throw Error(ErrorCode::kInvalidArgument, "adding forms of different degrees");
    }
    Form r = a.is_zero() ? Form(b.nvars_, b.degree_) : a;
    for (auto const& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Form operator-(Form const& a) {
    Form r(a.nvars_, a.degree_);
    for (auto const& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Form operator-(Form const& a, Form const& b) { return a + (-b); }

  friend Form operator*(Form const& a, Form const& b) {
    check_compatible(a, b);
    Form r(a.nvars_, a.degree_ + b.degree_);
    for (auto const& [ma, ca] : a.terms_) {
      for (auto const& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  friend Form operator*(S const& s, Form const& a) {
    Form r(a.nvars_, a.degree_);
    for (auto const& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }

 private:
  static void check_compatible(Form const& a, Form const& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorCode::kDimensionMismatch, "forms in different variables");
  }

  int nvars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

// 1 in the scalar type of `zero`, built from a sample value.
inline Rational convert_one(Rational const&, Rational const&) { return Rational(1); }
inline Interval convert_one(Interval const&, Interval const& like) {
  return ScalarOps<Interval>::lift(1, like);
}
inline PAdic convert_one(PAdic const&, PAdic const& like) {
  return PAdic::from_rational(1, like.prime(), std::max(like.relative_precision(), kDefaultPadicDigits));
}

// f(x) with coefficients converted to T by `convert`.
template <typename T, typename S, typename Convert>
T evaluate_with(Form<S> const& f, std::vector<T> const& x, T const& zero, Convert&& convert) {
  if (static_cast<int>(x.size()) != f.nvars()) {
    throw Error(ErrorCode::kDimensionMismatch, "point dimension does not match the form");
  }
  std::vector<std::vector<T>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].push_back(convert_one(zero, x[i]));
    for (int e = 1; e <= f.degree(); ++e) powers[i].push_back(powers[i].back() * x[i]);
  }
  T acc = zero;
  for (auto const& [m, c] : f.terms()) {
    T term = convert(c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (m[i] > 0) term = term * powers[i][m[i]];
    }
    acc = acc + term;
  }
  return acc;
}

Rational evaluate(Form<Rational> const& f, RationalVector const& x);
Interval evaluate(Form<Interval> const& f, RationalVector const& x);
Interval evaluate(Form<Interval> const& f, std::vector<Interval> const& x);
Interval evaluate(Form<Rational> const& f, std::vector<Interval> const& x);
// x is embedded into Q_p with the coefficients' prime and N digits.
PAdic evaluate(Form<PAdic> const& f, RationalVector const& x, int N = kDefaultPadicDigits);

// (g f)(x) = f(g^{-1} x): a left action preserving value sets for g in
// GL_n(O_S). Errors: SINGULAR_MATRIX, DIMENSION_MISMATCH.
template <typename S>
Form<S> apply_gl(RationalMatrix const& g, Form<S> const& f);

// "x1^3 + 2*x2^3 - 6*x1*x2*x3"
std::string to_string(Form<Rational> const& f);

// Forms with all interval coefficients containing exactly one multiple of
// 1/den, returned as exact rationals; nothing when some coefficient is
// ambiguous or not narrow enough.
std::optional<Form<Rational>> snap_to_rational(Form<Interval> const& f, Integer const& den = 1);

}  // namespace normlab
