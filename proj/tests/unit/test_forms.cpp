#include <random>
#include <set>

#include <gtest/gtest.h>

#include "normlab/embeddings.hpp"
#include "normlab/error.hpp"
#include "normlab/forms.hpp"
#include "normlab/linalg.hpp"

using namespace normlab;

namespace {

Form<Rational> parse_terms(int nvars, int degree,
                           std::vector<std::pair<Monomial, long>> const& terms) {
  Form<Rational> f(nvars, degree);
  for (auto const& [m, c] : terms) f.add_term(m, Rational(c));
  return f;
}

RationalVector vec(std::vector<long> const& v) {
  RationalVector x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x[static_cast<int>(i)] = v[i];
  return x;
}

}  // namespace

TEST(NormForm, Quadratic) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  EXPECT_EQ(to_string(norm_form(*k)), "x1^2 - 2*x2^2");
  auto const ki = make_field(std::vector<long>{1, 0, 1});
  EXPECT_EQ(to_string(norm_form(*ki)), "x1^2 + x2^2");
}

TEST(NormForm, CubicMatchesSymbolicDeterminant) {
  auto const k = make_field(std::vector<long>{-2, 0, 0, 1});
  auto const expected = parse_terms(3, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 2}, {{0, 0, 3}, 4}, {{1, 1, 1}, -6}});
  EXPECT_EQ(norm_form(*k).terms(), expected.terms());
  EXPECT_EQ(evaluate(norm_form(*k), vec({1, 1, 1})), 1);
}

TEST(NormForm, EqualsProductOfLinearFactors) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (auto const& coeffs : {std::vector<long>{-2, 0, 0, 1}, std::vector<long>{-1, -1, 0, 0, 1},
                             std::vector<long>{1, 0, 1}}) {
    auto const k = make_field(coeffs);
    auto const f = norm_form(*k);
    auto const roots = real_embeddings(*k, 96);
    for (int trial = 0; trial < 20; ++trial) {
      RationalVector x(k->degree);
      for (int i = 0; i < k->degree; ++i) x[i] = coord(rng);
      ComplexInterval prod(Interval(1));
      for (auto const& r : roots.roots) {
        ComplexInterval l(Interval(0));
        for (int j = k->degree - 1; j >= 0; --j) l = l * r.value + ComplexInterval(Interval(x[j]));
        prod = prod * l;
      }
      Rational const exact = evaluate(f, x);
      EXPECT_TRUE(prod.re().contains(exact));
      EXPECT_TRUE(prod.im().contains_zero());
      EXPECT_EQ(denominator(exact), 1);
    }
    RationalVector e1 = RationalVector::Zero(k->degree);
    e1[0] = 1;
    EXPECT_EQ(evaluate(f, e1), 1);
  }
}

TEST(ApplyGl, SwapAndGroupAction) {
  auto const f = norm_form(*make_field(std::vector<long>{-2, 0, 1}));
  RationalMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_EQ(to_string(apply_gl(swap, f)), "-2*x1^2 + x2^2");
  EXPECT_EQ(apply_gl(RationalMatrix::Identity(2, 2), f).terms(), f.terms());
  RationalMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  EXPECT_THROW(apply_gl(singular, f), Error);

  auto const g3 = norm_form(*make_field(std::vector<long>{-2, 0, 0, 1}));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = entry(rng);
        b(i, j) = entry(rng);
      }
    if (determinant(a) == 0 || determinant(b) == 0) continue;
    EXPECT_EQ(apply_gl(RationalMatrix(a * b), g3).terms(), apply_gl(a, apply_gl(b, g3)).terms());
  }
}

TEST(ApplyGl, UnimodularValueSetsCoincide) {
  // Over the same box, small values of f and gf form the same set: each
  // such value has a representative of small height for both forms.
  for (auto const& coeffs : {std::vector<long>{-2, 0, 1}, std::vector<long>{1, 0, 1}}) {
    auto const f = norm_form(*make_field(coeffs));
    RationalMatrix g(2, 2);
    g << 1, 1, 0, 1;
    auto const gf = apply_gl(g, f);
    EXPECT_NE(gf.terms(), f.terms());
    std::set<Rational> a, b;
    int const H = 30;
    for (int x = -H; x <= H; ++x)
      for (int y = -H; y <= H; ++y) {
        Rational const u = evaluate(f, vec({x, y}));
        Rational const w = evaluate(gf, vec({x, y}));
        if (abs(u) <= 50) a.insert(u);
        if (abs(w) <= 50) b.insert(w);
      }
    EXPECT_EQ(a, b);
  }
}

TEST(Anisotropy, Certificates) {
  EXPECT_TRUE(is_anisotropic({1, 0, 1}, Place::archimedean()).anisotropic);
  for (long p : {2L, 3L, 5L, 7L}) EXPECT_FALSE(is_anisotropic({1, 0, -1}, Place::prime(Integer(p))).anisotropic);
  EXPECT_FALSE(is_anisotropic({1, 0, -1}, Place::archimedean()).anisotropic);
  EXPECT_FALSE(is_anisotropic({1, 0, -2}, Place::prime(Integer(7))).anisotropic);
  EXPECT_TRUE(is_anisotropic({1, 0, -2}, Place::prime(Integer(3))).anisotropic);
  EXPECT_EQ(anisotropic_binary(Place::prime(Integer(3))), (BinaryQuadratic{1, 0, -2}));
  EXPECT_EQ(anisotropic_binary(Place::prime(Integer(7))), (BinaryQuadratic{1, 0, -3}));
  EXPECT_EQ(anisotropic_binary(Place::prime(Integer(2))), (BinaryQuadratic{1, 0, -5}));
  EXPECT_TRUE(is_anisotropic({1, 0, -5}, Place::prime(Integer(2))).anisotropic);
  // x^2 - 2 p y^2 style: odd valuation
  EXPECT_TRUE(is_anisotropic({1, 0, -5}, Place::prime(Integer(5))).anisotropic);
  // x^2 + 7 y^2 at 2: disc -28 = 4 * -7, -7 = 1 mod 8 so isotropic
  EXPECT_FALSE(is_anisotropic({1, 0, 7}, Place::prime(Integer(2))).anisotropic);
}

TEST(Anisotropy, DefaultsHaveNoSmallZeros) {
  // Independent oracle: search for primitive zeros mod p^3.
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    auto const q = anisotropic_binary(Place::prime(Integer(p)));
    long const m = p * p * p;
    long const c = static_cast<long>(numerator(q.c));
    for (long x = 0; x < m; ++x)
      for (long y = 0; y < m; ++y) {
        if (x % p == 0 && y % p == 0) continue;
        EXPECT_NE(((x * x + c * y * y) % m + m) % m, 0) << p << " " << x << " " << y;
      }
  }
}

TEST(QuasiNorm, RationalBaseIsSumOfSquares) {
  auto const q = make_field(std::vector<long>{0, 1});
  auto const f = quasi_norm_form(q, parse_places("inf"));
  ASSERT_TRUE(f.components[0].exact.has_value());
  EXPECT_EQ(to_string(*f.components[0].exact), "x1^2 + x2^2");
}

TEST(QuasiNorm, CmIdentityForSqrt2) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  auto const f = quasi_norm_form(k, parse_places("inf"));
  ASSERT_TRUE(f.components[0].exact.has_value());
  auto const& exact = *f.components[0].exact;
  // (x1^2 + 2x2^2 + x3^2 + 2x4^2)^2 - 8(x1x2 + x3x4)^2
  auto const expected =
      parse_terms(4, 4, {{{4, 0, 0, 0}, 1}, {{2, 2, 0, 0}, -4}, {{2, 0, 2, 0}, 2}, {{2, 0, 0, 2}, 4},
                         {{1, 1, 1, 1}, -16}, {{0, 4, 0, 0}, 4}, {{0, 2, 2, 0}, 4}, {{0, 2, 0, 2}, 8},
                         {{0, 0, 4, 0}, 1}, {{0, 0, 2, 2}, -4}, {{0, 0, 0, 4}, 4}});
  EXPECT_EQ(exact.terms(), expected.terms());
  for (auto const& [m, c] : f.components[0].real->terms()) {
    EXPECT_LT(c.rad(), pow(Rational(2), -20));
  }
  // Norm form of Q(sqrt2 + i) in the basis {1, sqrt2, i, i sqrt2}.
  auto const cm = make_field(std::vector<long>{9, 0, -2, 0, 1});
  RationalMatrix b(4, 4);
  b << 1, 0, 0, Rational(-1, 2), 0, Rational(5, 6), Rational(1, 6), 0, 0, 0, 0, Rational(1, 2), 0,
      Rational(-1, 6), Rational(1, 6), 0;
  EXPECT_EQ(apply_gl(inverse(b), norm_form(*cm)).terms(), exact.terms());
  EXPECT_EQ(evaluate(exact, vec({1, 0, 0, 1})), 9);
}

TEST(QuasiNorm, PadicComponent) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  auto const f = quasi_norm_form(k, parse_places("inf,5"));
  ASSERT_EQ(f.components.size(), 2u);
  ASSERT_TRUE(f.components[1].padic.has_value());
  // 5 is inert: q(N(x1,x2), N(x3,x4)) with q = x^2 - 2y^2 and N = x^2 - 2y^2.
  auto const values = evaluate(f, vec({1, 1, 0, 1}));
  auto const& v5 = std::get<PAdic>(values[1].value);
  // N(1,1) = -1, N(0,1) = -2, q(-1,-2) = 1 - 8 = -7
  EXPECT_TRUE(v5.congruent(PAdic::from_rational(-7, Integer(5))));
  EXPECT_EQ(values[1].exact_abs(), 1);
  // Scaling by 5 multiplies the 5-adic absolute value by 5^-4.
  auto const scaled = evaluate(f, vec({5, 5, 0, 5}));
  EXPECT_EQ(scaled[1].exact_abs(), Rational(1, 625));
}

TEST(QuasiNorm, Errors) {
  auto const k3 = make_field(std::vector<long>{-2, 0, 0, 1});
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([&] { quasi_norm_form(k3, parse_places("inf")); }), ErrorCode::kNotTotallyReal);
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  EXPECT_EQ(code([&] { quasi_norm_form(k, parse_places("inf,2")); }), ErrorCode::kRamifiedPrime);
  std::vector<QuasiChoice> bad{{Place::archimedean(), {{1, 0, -1}, {1, 0, 1}}}};
  EXPECT_EQ(code([&] { quasi_norm_form(k, parse_places("inf"), bad); }), ErrorCode::kAnisotropyFailure);
  std::vector<QuasiChoice> mixed{{Place::archimedean(), {{1, 0, 1}, {2, 1, 3}}}};
  auto const f = quasi_norm_form(k, parse_places("inf"), mixed);
  EXPECT_TRUE(f.components[0].real.has_value());
  EXPECT_FALSE(f.components[0].exact.has_value());
}
