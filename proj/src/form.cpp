#include "normlab/form.hpp"

#include <sstream>

#include "normlab/linalg.hpp"

namespace normlab {

Rational evaluate(Form<Rational> const& f, RationalVector const& x) {
  std::vector<Rational> const xs(x.data(), x.data() + x.size());
  return evaluate_with(f, xs, Rational(0), [](Rational const& c) { return c; });
}

Interval evaluate(Form<Interval> const& f, std::vector<Interval> const& x) {
  return evaluate_with(f, x, Interval(0), [](Interval const& c) { return c; });
}

Interval evaluate(Form<Interval> const& f, RationalVector const& x) {
  std::vector<Interval> xs;
  for (int i = 0; i < x.size(); ++i) xs.emplace_back(x[i]);
  return evaluate(f, xs);
}

Interval evaluate(Form<Rational> const& f, std::vector<Interval> const& x) {
  return evaluate_with(f, x, Interval(0), [](Rational const& c) { return Interval(c); });
}

PAdic evaluate(Form<PAdic> const& f, RationalVector const& x, int N) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "p-adic evaluation of the zero form");
  Integer const p = f.terms().begin()->second.prime();
  std::vector<PAdic> xs;
  for (int i = 0; i < x.size(); ++i) xs.push_back(PAdic::from_rational(x[i], p, N));
  return evaluate_with(f, xs, PAdic::exact_zero(p), [](PAdic const& c) { return c; });
}

template <typename S>
Form<S> apply_gl(RationalMatrix const& g, Form<S> const& f) {
  int const n = f.nvars();
  if (g.rows() != n || g.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix size does not match the form");
  }
  if (f.is_zero()) return f;
  RationalMatrix const h = inverse(g);
  S const& like = f.terms().begin()->second;
  // x_i = sum_j h_ij y_j
  std::vector<std::vector<Form<S>>> powers(n);
  for (int i = 0; i < n; ++i) {
    std::vector<S> row;
    for (int j = 0; j < n; ++j) row.push_back(ScalarOps<S>::lift(h(i, j), like));
    Form<S> const xi = Form<S>::linear(row);
    powers[i].push_back(Form<S>::constant(n, ScalarOps<S>::lift(1, like)));
    for (int e = 1; e <= f.degree(); ++e) powers[i].push_back(powers[i].back() * xi);
  }
  Form<S> out(n, f.degree());
  for (auto const& [m, c] : f.terms()) {
    Form<S> term = Form<S>::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (m[i] > 0) term = term * powers[i][m[i]];
    }
    out = out + term;
  }
  return out;
}

template Form<Rational> apply_gl(RationalMatrix const&, Form<Rational> const&);
template Form<Interval> apply_gl(RationalMatrix const&, Form<Interval> const&);
template Form<PAdic> apply_gl(RationalMatrix const&, Form<PAdic> const&);

std::string to_string(Form<Rational> const& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto const& [m, c] : f.terms()) {
    Rational const a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool const unit = (a == 1);
    bool constant = true;
    for (int e : m) constant = constant && e == 0;
    if (!unit || constant) {
      out << (denominator(a) == 1 ? numerator(a).str() : numerator(a).str() + "/" + denominator(a).str());
    }
    bool need_star = !unit || constant;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << "x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

std::optional<Form<Rational>> snap_to_rational(Form<Interval> const& f, Integer const& den) {
  Form<Rational> out(f.nvars(), f.degree());
  Interval const scale{Rational(den)};
  for (auto const& [m, c] : f.terms()) {
    Interval const scaled = c * scale;
    if (scaled.rad() >= Rational(1, 4)) return std::nullopt;
    auto const ints = scaled.integers_inside(2);
    if (ints.size() != 1) return std::nullopt;
    out.add_term(m, Rational(ints.front(), den));
  }
  return out;
}

}  // namespace normlab
