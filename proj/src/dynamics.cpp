#include "normlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "normlab/embeddings.hpp"
#include "normlab/error.hpp"
#include "normlab/linalg.hpp"
#include "normlab/local_field.hpp"

namespace normlab {
namespace {

IntervalVector multiply(IntervalMatrix const& m, IntervalVector const& x) {
  IntervalVector y(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Interval acc(0);
    for (int j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

IntervalMatrix multiply(IntervalMatrix const& a, IntervalMatrix const& b) {
  IntervalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Interval acc(0);
      for (int k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

Rational floor_rational(Rational const& x) {
  Integer q = numerator(x) / denominator(x);
  if (q * denominator(x) > numerator(x)) --q;
  return Rational(q);
}

Rational ceil_rational(Rational const& x) { return -floor_rational(-x); }

long floor_long(Rational const& x) { return static_cast<long>(numerator(floor_rational(x))); }

// p^{a/b} for a >= 0.
Interval rational_power(Integer const& p, Rational const& e) {
  return root(Interval(pow(Rational(p), static_cast<int>(numerator(e)))),
              static_cast<unsigned>(denominator(e)));
}

std::vector<long> canonical(std::vector<long> z) {
  for (long v : z) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& x : z) x = -x;
    }
    break;
  }
  return z;
}

// Running minimum of certified norms: lower and upper bounds independently.
struct MinTracker {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::vector<long> witness;
  std::uint64_t count = 0;

  void offer(std::vector<long> const& z, Interval const& norm) {
    ++count;
    Rational const lo = norm.lower();
    Rational const hi = norm.upper();
    if (!lower || lo < *lower) lower = lo;
    auto const c = canonical(z);
    if (!upper || hi < *upper || (hi == *upper && c < witness)) {
      upper = hi;
      witness = c;
    }
  }

  ShortestVector result(IntervalMatrix const& basis) const {
    ShortestVector out;
    out.coefficients = witness;
    out.norm = Interval(*lower, *upper);
    out.candidates = count;
    IntervalVector z(static_cast<int>(witness.size()));
    for (std::size_t i = 0; i < witness.size(); ++i) z[static_cast<int>(i)] = Interval(witness[i]);
    out.vector = multiply(basis, z);
    return out;
  }
};

}  // namespace

IntervalVector to_intervals(RationalVector const& x) {
  IntervalVector y(x.size());
  for (int i = 0; i < x.size(); ++i) y[i] = Interval(x[i]);
  return y;
}

Interval sup_norm(IntervalMatrix const& m) {
  Interval best(0);
  for (int i = 0; i < m.rows(); ++i) {
    Interval row(0);
    for (int j = 0; j < m.cols(); ++j) row = row + abs(m(i, j));
    best = max(best, row);
  }
  return best;
}

Interval sup_norm(IntervalVector const& v) {
  Interval best(0);
  for (int i = 0; i < v.size(); ++i) best = max(best, abs(v[i]));
  return best;
}

IntervalMatrix enclose_inverse(IntervalMatrix const& m) {
  int const n = static_cast<int>(m.rows());
  if (m.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "inverse of a non-square matrix");
  RationalMatrix mid(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mid(i, j) = m(i, j).mid();
  }
  RationalMatrix const mid_inv = inverse(mid);
  IntervalMatrix mi(n, n), e(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      mi(i, j) = Interval(mid_inv(i, j));
      e(i, j) = m(i, j) - Interval(mid(i, j));
    }
  }
  // B^{-1} - M^{-1} = ((I + M^{-1}E)^{-1} - I) M^{-1}, bounded by
  // delta / (1 - delta) * ||M^{-1}|| with delta = ||M^{-1} E||.
  Rational const delta = sup_norm(multiply(mi, e)).upper();
  if (delta >= Rational(1, 2)) throw Error(ErrorCode::kPrecisionLoss, "matrix too close to singular");
  Rational const spread = delta / (1 - delta) * sup_norm(mi).upper();
  IntervalMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = mi(i, j) + Interval(-spread, spread);
  }
  return out;
}

IntervalVector SplitStructure::eigen(IntervalVector const& x) const { return multiply(P, x); }

Interval SplitStructure::block_norm(IntervalVector const& y, std::size_t i) const {
  auto const& b = blocks[i];
  if (b.kind == BlockKind::kReal) return abs(y[b.offset]);
  return sqrt(sqr(y[b.offset]) + sqr(y[b.offset + 1]));
}

Interval SplitStructure::phi(IntervalVector const& x) const {
  IntervalVector const y = eigen(x);
  Interval prod = c;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto const& b = blocks[i];
    prod = prod * (b.kind == BlockKind::kReal ? y[b.offset] : sqr(y[b.offset]) + sqr(y[b.offset + 1]));
  }
  return prod;
}

Interval SplitStructure::k_hat() const {
  bool const complex = std::any_of(blocks.begin(), blocks.end(),
                                   [](Block const& b) { return b.kind == BlockKind::kComplex; });
  Interval const cn = root(abs(c), static_cast<unsigned>(dimension()));
  Interval const upper = sup_norm(P_inv) / cn;
  Interval const lower = (complex ? interval_sqrt(2) : Interval(1)) * sup_norm(P) * cn;
  return max(upper, lower);
}

SplitStructure split_structure(NumberField const& field, int prec) {
  PrecisionGuard guard(prec);
  auto const roots = real_embeddings(field, prec);
  int const n = field.degree;
  SplitStructure st;
  st.P = IntervalMatrix(n, n);
  int row = 0;
  for (int r = 0; r < roots.real_count; ++r) {
    Interval power(1);
    for (int j = 0; j < n; ++j) {
      st.P(row, j) = power;
      power = power * roots.roots[r].value.re();
    }
    st.blocks.push_back({BlockKind::kReal, row, 1});
    ++row;
  }
  for (int k = 0; k < roots.complex_pairs; ++k) {
    ComplexInterval const& rho = roots.roots[roots.real_count + 2 * k].value;
    ComplexInterval power(Interval(1));
    for (int j = 0; j < n; ++j) {
      st.P(row, j) = power.re();
      st.P(row + 1, j) = power.im();
      power = power * rho;
    }
    st.blocks.push_back({BlockKind::kComplex, row, 2});
    row += 2;
  }
  st.P_inv = enclose_inverse(st.P);
  st.c = Interval(1);
  return st;
}

SplitStructure quasi_split_structure(NumberField const& field, std::vector<BinaryQuadratic> const& q,
                                     int prec) {
  PrecisionGuard guard(prec);
  auto const roots = real_embeddings(field, prec);
  int const s = field.degree;
  if (roots.real_count != s) throw Error(ErrorCode::kNotTotallyReal, "quasi-norm forms need a totally real field");
  if (static_cast<int>(q.size()) != s) throw Error(ErrorCode::kDimensionMismatch, "one q per real embedding");
  SplitStructure st;
  st.P = IntervalMatrix(2 * s, 2 * s);
  st.c = Interval(1);
  for (int i = 0; i < s; ++i) {
    auto const& qi = q[i];
    if (qi.discriminant() >= 0) throw Error(ErrorCode::kAnisotropyFailure, "q must be definite at inf");
    // q(A, B) = a |A - rho B|^2 with rho a root of a z^2 + b z + c.
    Interval const two_a = Interval(2 * qi.a);
    Interval const re_rho = Interval(-qi.b) / two_a;
    Interval const im_rho = interval_sqrt(-qi.discriminant()) / two_a;
    Interval power(1);
    for (int j = 0; j < s; ++j) {
      st.P(2 * i, j) = power;
      st.P(2 * i, s + j) = -re_rho * power;
      st.P(2 * i + 1, j) = Interval(0);
      st.P(2 * i + 1, s + j) = -im_rho * power;
      power = power * roots.roots[i].value.re();
    }
    st.blocks.push_back({BlockKind::kComplex, 2 * i, 2});
    st.c = st.c * Interval(qi.a);
  }
  st.P_inv = enclose_inverse(st.P);
  return st;
}

SplitStructure binary_split_structure(Interval const& a, Interval const& b, Interval const& c) {
  SplitStructure st;
  st.P = IntervalMatrix(2, 2);
  if (a.is_point() && a.lower() == 0) {
    // y (b x + c y)
    if (!b.certainly_nonzero()) throw Error(ErrorCode::kSingularMatrix, "degenerate binary form");
    st.P << Interval(0), Interval(1), b, c;
    st.blocks = {{BlockKind::kReal, 0, 1}, {BlockKind::kReal, 1, 1}};
    st.c = Interval(1);
  } else {
    if (!a.certainly_nonzero()) throw Error(ErrorCode::kPrecisionLoss, "leading coefficient not separated from 0");
    Interval const d = sqr(b) - Interval(4) * a * c;
    Interval const two_a = Interval(2) * a;
    if (d.certainly_positive()) {
      Interval const root_d = sqrt(d);
      Interval const r1 = (-b + root_d) / two_a;
      Interval const r2 = (-b - root_d) / two_a;
      st.P << Interval(1), -r1, Interval(1), -r2;
      st.blocks = {{BlockKind::kReal, 0, 1}, {BlockKind::kReal, 1, 1}};
    } else if (d.certainly_negative()) {
      st.P << Interval(1), b / two_a, Interval(0), -sqrt(-d) / two_a;
      st.blocks = {{BlockKind::kComplex, 0, 2}};
    } else {
      throw Error(ErrorCode::kSingularMatrix, "binary form with (possibly) zero discriminant");
    }
    st.c = a;
  }
  st.P_inv = enclose_inverse(st.P);
  return st;
}

std::optional<SplitStructure> structure_for(SForm const& f, int prec) {
  PrecisionGuard guard(prec);
  if (f.kind == FormKind::kNorm && !f.field.empty()) return split_structure(*make_field(f.field), prec);
  if (f.kind == FormKind::kQuasi && !f.field.empty()) {
    for (auto const& choice : f.q_choices) {
      if (choice.place.is_archimedean()) return quasi_split_structure(*make_field(f.field), choice.q, prec);
    }
    return std::nullopt;
  }
  if (f.nvars() != 2 || f.degree() != 2) return std::nullopt;
  FormComponent const* arch = nullptr;
  for (auto const& c : f.components) {
    if (c.place.is_archimedean()) arch = &c;
  }
  if (!arch) return std::nullopt;
  auto const coefficient = [&](Monomial const& m) -> Interval {
    if (arch->exact) {
      auto const c = arch->exact->coefficient(m);
      return c ? Interval(*c) : Interval(0);
    }
    if (arch->real) {
      auto const c = arch->real->coefficient(m);
      return c ? *c : Interval(0);
    }
    return Interval(0);
  };
  try {
    return binary_split_structure(coefficient({2, 0}), coefficient({1, 1}), coefficient({0, 2}));
  } catch (Error const&) {
    return std::nullopt;
  }
}

bool TorusElement::determinant_one(SplitStructure const& st, double tol) const {
  Interval prod(1);
  for (std::size_t i = 0; i < lambda.size(); ++i) prod = prod * pow(lambda[i], st.blocks[i].dim);
  bool const arch_ok = prod.lower() >= Rational(1 - tol) && prod.upper() <= Rational(1 + tol);
  long sum = 0;
  for (std::size_t i = 0; i < l.size(); ++i) sum += static_cast<long>(l[i]) * degrees[i];
  return arch_ok && sum == 0;
}

TorusElement identity_torus(SplitStructure const& st) {
  TorusElement t;
  t.lambda.assign(st.blocks.size(), Interval(1));
  return t;
}

IntervalVector apply(SplitStructure const& st, TorusElement const& t, IntervalVector const& x) {
  IntervalVector y = st.eigen(x);
  for (std::size_t i = 0; i < st.blocks.size(); ++i) {
    auto const& b = st.blocks[i];
    for (int k = 0; k < b.dim; ++k) y[b.offset + k] = y[b.offset + k] * t.lambda[i];
  }
  return multiply(st.P_inv, y);
}

SplitBalanceResult split_balance(SplitStructure const& st, IntervalVector const& w) {
  IntervalVector const y = st.eigen(w);
  int const n = st.dimension();
  std::vector<Interval> norms;
  Interval prod(1);
  for (std::size_t i = 0; i < st.blocks.size(); ++i) {
    Interval const b = st.block_norm(y, i);
    if (b.upper() == 0) throw Error(ErrorCode::kNullComponent, "block " + std::to_string(i + 1) + " is zero");
    if (!b.certainly_positive()) {
      throw Error(ErrorCode::kPrecisionLoss, "block " + std::to_string(i + 1) + " not separated from zero");
    }
    norms.push_back(b);
    prod = prod * pow(b, st.blocks[i].dim);
  }
  Interval const m = root(prod, static_cast<unsigned>(n));
  SplitBalanceResult out;
  out.t.lambda.clear();
  Interval residual(0);
  for (auto const& b : norms) {
    Interval const lambda = m / b;
    out.t.lambda.push_back(lambda);
    residual = max(residual, abs(lambda * b / m - Interval(1)));
  }
  out.residual = residual;
  out.norm = sup_norm(apply(st, out.t, w));
  out.target = root(abs(st.c) * prod, static_cast<unsigned>(n));
  out.ratio = out.norm / out.target;
  out.k_hat = st.k_hat();
  return out;
}

PadicBalanceResult padic_split_balance(std::vector<int> const& degrees, std::vector<int> const& beta,
                                       Integer const& p) {
  std::size_t const r = degrees.size();
  if (r < 1 || beta.size() != r) throw Error(ErrorCode::kInvalidArgument, "need matching degrees and block norms");
  long n = 0, total = 0;
  for (std::size_t i = 0; i < r; ++i) {
    n += degrees[i];
    total += static_cast<long>(degrees[i]) * beta[i];
  }
  Rational const mu(total, n);
  long const lo = floor_long(mu) - (n + 1);
  long const hi = floor_long(mu) + n + 2;
  // Balanced exponents m_i = beta_i + l_i with sum n_i m_i = total.
  std::vector<long> m(r, lo), best;
  std::optional<Rational> best_dev;
  while (true) {
    long partial = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) partial += degrees[i] * m[i];
    long const rest = total - partial;
    if (rest % degrees[r - 1] == 0) {
      m[r - 1] = rest / degrees[r - 1];
      Rational dev = 0;
      for (long v : m) dev = std::max(dev, Rational(abs(Rational(v) - mu)));
      if (!best_dev || dev < *best_dev) {
        best_dev = dev;
        best = m;
      }
    }
    std::size_t i = r - 1;
    while (i > 0 && m[i - 1] == hi) {
      m[i - 1] = lo;
      --i;
    }
    if (i == 0) break;
    ++m[i - 1];
  }
  PadicBalanceResult out;
  long top = std::numeric_limits<long>::min();
  for (std::size_t i = 0; i < r; ++i) {
    out.l.push_back(static_cast<int>(best[i] - beta[i]));
    top = std::max(top, best[i]);
  }
  out.excess = Rational(top) - mu;
  out.ratio = rational_power(p, out.excess);
  out.k_hat = Interval(pow(Rational(p), static_cast<int>(n + 1)));
  return out;
}

NullShrinkResult null_shrink(SplitStructure const& st, IntervalVector const& w, Rational const& eps) {
  if (eps <= 0) throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  IntervalVector const y = st.eigen(w);
  int zero_dim = 0, nonzero_dim = 0;
  Rational largest = 0;
  std::vector<bool> zero(st.blocks.size());
  for (std::size_t i = 0; i < st.blocks.size(); ++i) {
    Interval const b = st.block_norm(y, i);
    zero[i] = !b.certainly_positive();
    (zero[i] ? zero_dim : nonzero_dim) += st.blocks[i].dim;
    if (!zero[i]) largest = std::max(largest, b.upper());
  }
  if (zero_dim == 0) throw Error(ErrorCode::kAllBlocksNonzero, "no block of w vanishes");
  NullShrinkResult out;
  out.t = identity_torus(st);
  out.s = 0;
  out.norm = sup_norm(w);
  if (out.norm.upper() <= eps) return out;
  if (nonzero_dim == 0) throw Error(ErrorCode::kPrecisionLoss, "w is not separated from zero");
  // e^{-s} ||P^{-1}|| max ||w_i|| < eps / 2 leaves room for the null blocks.
  double const need = std::log(2 * sup_norm(st.P_inv).upper_double() * static_cast<double>(largest) /
                               static_cast<double>(eps));
  Rational s = ceil_rational(Rational(std::max(need, 0.0) * 16)) / 16 + Rational(1, 16);
  for (int attempt = 0; attempt < 64; ++attempt) {
    TorusElement t;
    for (std::size_t i = 0; i < st.blocks.size(); ++i) {
      t.lambda.push_back(zero[i] ? exp(Interval(s * nonzero_dim / zero_dim)) : exp(Interval(-s)));
    }
    Interval const norm = sup_norm(apply(st, t, w));
    if (norm.upper() < eps) {
      out.t = std::move(t);
      out.s = s;
      out.norm = norm;
      return out;
    }
    s += Rational(1, 2);
  }
  throw Error(ErrorCode::kPrecisionLoss, "could not certify ||t w|| < eps");
}

BalancedReduceResult balanced_reduce(Field const& field, std::vector<Place> const& places,
                                     RationalVector const& w, int prec) {
  PrecisionGuard guard(prec);
  SRing const ring = SRing::from_places(places);
  for (auto const& p : ring.primes) {
    if (field->disc % p == 0) throw Error(ErrorCode::kRamifiedPrime, "p divides disc: " + p.str());
  }
  int const n = field->degree;
  Rational const value = evaluate(norm_form(*field), w);
  if (value == 0) throw Error(ErrorCode::kZeroContent, "f(w) = 0");
  BalancedReduceResult out;
  RationalVector value_vec(1);
  value_vec[0] = value;
  auto const scalar = SVector::global(value_vec, places);
  out.unit = unit_balance(scalar, n, ring);
  Rational const xi = out.unit.xi.value(ring);
  RationalVector const xw = w * xi;

  SplitStructure const st = split_structure(*field, prec);
  out.arch = split_balance(st, to_intervals(xw));
  out.norm = out.arch.norm;
  Interval k = out.arch.k_hat;
  for (auto const& p : ring.primes) {
    FiniteBalance fb;
    fb.p = p;
    for (auto const& factor : padic_factor_degrees(*field, p)) {
      int v = std::numeric_limits<int>::max();
      for (auto const& c : local_image(factor, xw)) {
        if (!c.is_exact_zero()) v = std::min(v, c.valuation());
      }
      fb.degrees.push_back(factor.local_degree);
      fb.beta.push_back(-v);
    }
    fb.balance = padic_split_balance(fb.degrees, fb.beta, p);
    int top = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < fb.beta.size(); ++i) top = std::max(top, fb.beta[i] + fb.balance.l[i]);
    out.norm = max(out.norm, Interval(pow(Rational(p), top)));
    k = max(k, fb.balance.k_hat);
    out.finite.push_back(std::move(fb));
  }
  Rational const cont = *exact_content(scalar);
  out.target = root(Interval(cont), static_cast<unsigned>(n * places.size()));
  out.ratio = out.norm / out.target;
  out.bound = k * out.unit.kappa_hat;
  return out;
}

LatticeBasis make_lattice(IntervalMatrix const& basis) {
  int const n = static_cast<int>(basis.rows());
  if (basis.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "lattice basis must be square");
  SquareArray<Interval> a(n, std::vector<Interval>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = basis(i, j);
  }
  Interval const det = subset_determinant(a, Interval(1));
  if (!det.certainly_nonzero()) throw Error(ErrorCode::kSingularMatrix, "lattice basis is (possibly) singular");
  return {basis, det};
}

LatticeBasis normalized(LatticeBasis const& lattice) {
  int const n = lattice.dimension();
  Interval const scale = root(abs(lattice.det), static_cast<unsigned>(n));
  IntervalMatrix b = lattice.basis;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = b(i, j) / scale;
  }
  return make_lattice(b);
}

Interval lattice_vector_norm(IntervalMatrix const& basis, std::vector<long> const& z) {
  Interval sum(0);
  for (int i = 0; i < basis.rows(); ++i) {
    Interval v(0);
    for (int j = 0; j < basis.cols(); ++j) {
      if (z[j] != 0) v = v + basis(i, j) * Interval(z[j]);
    }
    sum = sum + sqr(v);
  }
  return sqrt(sum);
}

std::vector<std::vector<long>> lll_transform(IntervalMatrix const& basis) {
  int const n = static_cast<int>(basis.cols());
  int const rows = static_cast<int>(basis.rows());
  std::vector<std::vector<long double>> b(n, std::vector<long double>(rows));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < rows; ++i) b[j][i] = basis(i, j).mid_double();
  }
  std::vector<std::vector<long>> u(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) u[j][j] = 1;  // u[j] = coefficients of column j
  auto const dot = [&](std::vector<long double> const& x, std::vector<long double> const& y) {
    long double s = 0;
    for (int i = 0; i < rows; ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<std::vector<long double>> star(n), mu(n, std::vector<long double>(n));
  std::vector<long double> norm2(n);
  auto const gram_schmidt = [&]() {
    for (int i = 0; i < n; ++i) {
      star[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = norm2[j] > 0 ? dot(b[i], star[j]) / norm2[j] : 0;
        for (int k = 0; k < rows; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      norm2[i] = dot(star[i], star[i]);
    }
  };
  gram_schmidt();
  int k = 1;
  int guard = 0;
  while (k < n && guard++ < 100000) {
    for (int j = k - 1; j >= 0; --j) {
      long double const q = std::round(mu[k][j]);
      if (q == 0) continue;
      long const qi = static_cast<long>(q);
      for (int i = 0; i < rows; ++i) b[k][i] -= q * b[j][i];
      for (int i = 0; i < n; ++i) u[k][i] -= qi * u[j][i];
      gram_schmidt();
    }
    if (norm2[k] >= (0.99L - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(u[k], u[k - 1]);
      gram_schmidt();
      k = std::max(k - 1, 1);
    }
  }
  return u;
}

ShortestVector shortest_vector(LatticeBasis const& lattice, EnumerationOptions const& options) {
  int const n = lattice.dimension();
  if (n > 4) throw Error(ErrorCode::kDimensionTooLarge, "certified shortest vectors need n <= 4");
  auto const u = lll_transform(lattice.basis);
  IntervalMatrix reduced(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Interval acc(0);
      for (int k = 0; k < n; ++k) {
        if (u[j][k] != 0) acc = acc + lattice.basis(i, k) * Interval(u[j][k]);
      }
      reduced(i, j) = acc;
    }
  }
  Rational radius = -1;
  for (int j = 0; j < n; ++j) {
    std::vector<long> e(n, 0);
    e[j] = 1;
    Rational const r = lattice_vector_norm(reduced, e).upper();
    if (radius < 0 || r < radius) radius = r;
  }
  // |z'_i| <= ||row_i(B'^{-1})|| * ||B' z'|| for every coefficient vector.
  IntervalMatrix const inv = enclose_inverse(reduced);
  std::vector<long> bound(n);
  long double box = 1;
  for (int i = 0; i < n; ++i) {
    Interval row(0);
    for (int j = 0; j < n; ++j) row = row + sqr(inv(i, j));
    bound[i] = floor_long(radius * sqrt(row).upper());
    box *= 2.0L * bound[i] + 1;
  }
  if (box > static_cast<long double>(options.max_candidates)) {
    throw Error(ErrorCode::kEnumerationTooLarge, "shortest-vector box too large");
  }
  MinTracker tracker;
  std::vector<long> zp(n);
  for (int i = 0; i < n; ++i) zp[i] = -bound[i];
  std::vector<long> z(n);
  while (true) {
    bool const nonzero = std::any_of(zp.begin(), zp.end(), [](long v) { return v != 0; });
    if (nonzero) {
      for (int i = 0; i < n; ++i) {
        long acc = 0;
        for (int j = 0; j < n; ++j) acc += u[j][i] * zp[j];
        z[i] = acc;
      }
      tracker.offer(z, lattice_vector_norm(lattice.basis, z));
    }
    int i = n - 1;
    while (i >= 0 && zp[i] == bound[i]) {
      zp[i] = -bound[i];
      --i;
    }
    if (i < 0) break;
    ++zp[i];
  }
  return tracker.result(lattice.basis);
}

ShortestVector brute_force_shortest(LatticeBasis const& lattice, long H) {
  int const n = lattice.dimension();
  MinTracker tracker;
  std::vector<long> z(n, -H);
  while (true) {
    if (std::any_of(z.begin(), z.end(), [](long v) { return v != 0; })) {
      tracker.offer(z, lattice_vector_norm(lattice.basis, z));
    }
    int i = n - 1;
    while (i >= 0 && z[i] == H) {
      z[i] = -H;
      --i;
    }
    if (i < 0) break;
    ++z[i];
  }
  return tracker.result(lattice.basis);
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kBoundedBelow: return "BOUNDED_BELOW";
    case Verdict::kDecays: return "DECAYS";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

OrbitTrace orbit_trace(LatticeBasis const& l0, std::vector<Rational> const& u, TraceOptions const& options) {
  int const n = l0.dimension();
  if (static_cast<int>(u.size()) != n) throw Error(ErrorCode::kDimensionMismatch, "flow exponents must match n");
  if (options.step <= 0 || options.t_max < options.t_min) throw Error(ErrorCode::kInvalidArgument, "bad time grid");
  Rational sum = 0;
  for (auto const& x : u) sum += x;
  if (sum != 0) throw Error(ErrorCode::kInvalidArgument, "flow must have trace zero");
  OrbitTrace trace;
  trace.window = options;
  long const steps = floor_long((options.t_max - options.t_min) / options.step);
  for (long k = 0; k <= steps; ++k) {
    Rational const t = options.t_min + options.step * k;
    IntervalMatrix b = l0.basis;
    for (int i = 0; i < n; ++i) {
      Interval const scale = exp(Interval(u[i] * t));
      for (int j = 0; j < n; ++j) b(i, j) = b(i, j) * scale;
    }
    trace.samples.push_back({t, shortest_vector(LatticeBasis{b, l0.det})});
  }
  std::size_t lowest = 0;
  Rational min_lower = trace.samples.front().shortest.norm.lower();
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    auto const& norm = trace.samples[i].shortest.norm;
    if (norm.upper() < trace.samples[lowest].shortest.norm.upper()) lowest = i;
    min_lower = std::min(min_lower, norm.lower());
  }
  auto const& witness = trace.samples[lowest].shortest.norm;
  if (witness.upper() < options.threshold) {
    trace.verdict = Verdict::kDecays;
    trace.level = witness;
    trace.witness_sample = lowest;
  } else if (min_lower > 0) {
    trace.verdict = Verdict::kBoundedBelow;
    trace.level = Interval(min_lower, witness.upper());
  }
  return trace;
}

LatticeBasis structure_lattice(SplitStructure const& st) { return normalized(make_lattice(st.P)); }

std::vector<Rational> default_flow(SplitStructure const& st) {
  std::vector<Rational> u(st.dimension(), Rational(0));
  if (st.blocks.size() < 2) return u;
  for (int k = 0; k < st.blocks[0].dim; ++k) u[st.blocks[0].offset + k] = Rational(1, st.blocks[0].dim);
  for (int k = 0; k < st.blocks[1].dim; ++k) u[st.blocks[1].offset + k] = Rational(-1, st.blocks[1].dim);
  return u;
}

CompactnessReport compactness_report(SForm const& f, ReportOptions const& options) {
  PrecisionGuard guard(options.precision_bits);
  CompactnessReport report;
  report.scan = value_scan(f, options.scan);
  if (auto const g = f.global_form()) {
    report.zero_search_run = true;
    report.zero = rational_zero_search(*g, options.zero_height);
  }
  auto const st = structure_for(f, options.precision_bits);
  if (st) {
    report.trace = orbit_trace(structure_lattice(*st), default_flow(*st), options.trace);
  } else {
    report.trace_note = "no split torus structure is known for this form";
  }
  bool const zero_found = !report.scan.zeros.empty() || report.zero.has_value();
  bool const clean = !zero_found && report.scan.possible_zeros == 0;
  if (report.trace && clean && report.trace->verdict == Verdict::kBoundedBelow) {
    report.consistency = "NORM_LIKE";
  } else if (report.trace && zero_found && report.trace->verdict == Verdict::kDecays) {
    report.consistency = "ISOTROPIC";
  } else {
    report.consistency = "INCONCLUSIVE";
  }
  return report;
}

}  // namespace normlab
