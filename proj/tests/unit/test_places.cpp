#include <random>

#include <gtest/gtest.h>

#include "normlab/embeddings.hpp"
#include "normlab/error.hpp"
#include "normlab/local_field.hpp"
#include "normlab/place.hpp"

using namespace normlab;

TEST(PAdic, ConstructionAndAbs) {
  auto const x = PAdic::from_rational(Rational(1, 3), Integer(3), 8);
  EXPECT_EQ(x.valuation(), -1);
  EXPECT_EQ(x.normalized_abs(), Rational(3));
  auto const m = PAdic::from_rational(-1, Integer(5), 4);
  EXPECT_EQ(m.unit(), 624);
  EXPECT_EQ(m.digits(), (std::vector<Integer>{4, 4, 4, 4}));
  EXPECT_TRUE(PAdic::exact_zero(Integer(5)).is_exact_zero());
  EXPECT_EQ(PAdic::exact_zero(Integer(5)).normalized_abs(), 0);
  EXPECT_THROW(PAdic::from_rational(1, Integer(6), 4), Error);
}

TEST(PAdic, ArithmeticTracksPrecision) {
  Integer const p(5);
  auto const a = PAdic::from_rational(Rational(1, 3), p, 10);
  auto const b = PAdic::from_rational(Rational(2, 3), p, 10);
  EXPECT_TRUE((a + b).congruent(PAdic::from_rational(1, p, 10)));
  // 26 - 1 = 25 loses two digits of relative precision.
  auto const c = PAdic::from_rational(26, p, 6) - PAdic::from_rational(1, p, 6);
  EXPECT_EQ(c.valuation(), 2);
  EXPECT_EQ(c.relative_precision(), 4);
  auto const z = PAdic::from_rational(7, p, 3) - PAdic::from_rational(7, p, 3);
  EXPECT_TRUE(z.is_inexact_zero());
  EXPECT_EQ(z.valuation(), 3);
  EXPECT_THROW(z.normalized_abs(), Error);
  EXPECT_TRUE((a * b / b).congruent(a));
  EXPECT_EQ((a * b).representative() - Rational(2, 9), (a * b).representative() - Rational(2, 9));
  EXPECT_TRUE((a * b).congruent(PAdic::from_rational(Rational(2, 9), p, 10)));
}

TEST(Places, NormalizedAbs) {
  EXPECT_EQ(normalized_abs(Rational(-5), Place::archimedean()), 5);
  EXPECT_EQ(normalized_abs(Rational(1, 3), Place::prime(Integer(3))), 3);
  EXPECT_TRUE(normalized_abs(ComplexInterval(Interval(1), Interval(1))).contains(Rational(2)));
  EXPECT_THROW(Place::prime(Integer(9)), Error);
  auto const s = parse_places("7,inf,2");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(s[0].is_archimedean());
  EXPECT_EQ(s[1].p(), 2);
  EXPECT_THROW(parse_places("2,3"), Error);
  EXPECT_THROW(parse_places("inf,3,3"), Error);
}

TEST(Places, ProductFormulaForUnits) {
  std::vector<Place> const s = parse_places("inf,2,3,7");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Rational xi = (trial % 2) ? Rational(-1) : Rational(1);
    for (long p : {2, 3, 7}) xi *= pow(Rational(p), e(rng));
    Rational prod = 1;
    for (auto const& v : s) prod *= normalized_abs(xi, v);
    EXPECT_EQ(prod, 1);
  }
}

TEST(Embeddings, RealAndComplex) {
  auto const k2 = make_field(std::vector<long>{-2, 0, 1});
  auto const e2 = real_embeddings(*k2, 64);
  ASSERT_EQ(e2.real_count, 2);
  EXPECT_NEAR(e2.roots[1].value.re().mid_double(), 1.4142135623730951, 1e-15);
  EXPECT_LE(e2.roots[1].value.re().rad(), pow(Rational(2), -64));

  auto const k3 = make_field(std::vector<long>{-2, 0, 0, 1});
  auto const e3 = real_embeddings(*k3, 100);
  ASSERT_EQ(e3.real_count, 1);
  ASSERT_EQ(e3.complex_pairs, 1);
  EXPECT_TRUE(e3.roots[0].value.re().contains(parse_decimal("1.2599210498948731647")) ||
              e3.roots[0].value.re().overlaps(Interval(parse_decimal("1.25992104989487316476"),
                                                       parse_decimal("1.25992104989487316477"))));
  Interval const re = e3.roots[1].value.re();
  Interval const im = e3.roots[1].value.im();
  EXPECT_TRUE(re.overlaps(Interval(parse_decimal("-0.62996052494743658239"),
                                   parse_decimal("-0.62996052494743658238"))));
  EXPECT_TRUE(im.overlaps(Interval(parse_decimal("1.0911236359717214035"),
                                   parse_decimal("1.0911236359717214036"))));
  EXPECT_TRUE(e3.roots[2].value.im().certainly_negative());
  EXPECT_LE(re.rad(), pow(Rational(2), -100));

  auto const ki = make_field(std::vector<long>{1, 0, 1});
  auto const ei = real_embeddings(*ki, 32);
  EXPECT_EQ(ei.real_count, 0);
  EXPECT_TRUE(ei.roots[0].value.im().contains(Rational(1)));
  EXPECT_FALSE(is_totally_real(*ki));
  EXPECT_TRUE(is_totally_real(*k2));
}

TEST(Embeddings, RootsSatisfyPolynomial) {
  auto const p = from_integers(std::vector<long>{3, -1, 4, 0, -2, 1});
  auto const roots = polynomial_roots(p, 80);
  EXPECT_EQ(roots.real_count + 2 * roots.complex_pairs, 5);
  for (auto const& r : roots.roots) {
    ComplexInterval v(Interval(0));
    for (int i = p.degree(); i >= 0; --i) v = v * r.value + ComplexInterval(Interval(p.coefficients()[i]));
    EXPECT_TRUE(v.re().contains_zero());
    EXPECT_TRUE(v.im().contains_zero());
  }
}

TEST(LocalFactors, Degrees) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  auto const f7 = padic_factor_degrees(*k, Integer(7));
  ASSERT_EQ(f7.size(), 2u);
  EXPECT_EQ(f7[0].local_degree, 1);
  auto const f5 = padic_factor_degrees(*k, Integer(5));
  ASSERT_EQ(f5.size(), 1u);
  EXPECT_EQ(f5[0].local_degree, 2);
  try {
    padic_factor_degrees(*k, Integer(2));
    ADD_FAILURE();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRamifiedPrime);
  }
  auto const k3 = make_field(std::vector<long>{-2, 0, 0, 1});
  auto const f31 = padic_factor_degrees(*k3, Integer(31), 12);
  EXPECT_EQ(f31.size(), 3u);
  auto const f5c = padic_factor_degrees(*k3, Integer(5), 12);
  ASSERT_EQ(f5c.size(), 2u);
  EXPECT_EQ(f5c[1].local_degree, 2);
}

TEST(LocalFactors, HenselProductIsMinPoly) {
  auto const k3 = make_field(std::vector<long>{-2, 0, 0, 1});
  Integer const p(31);
  auto const fs = padic_factor_degrees(*k3, p, 10);
  Integer const m = pow(p, 10u);
  std::vector<Integer> prod{1};
  for (auto const& f : fs) {
    std::vector<Integer> next(prod.size() + f.factor_poly.size() - 1, Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i)
      for (std::size_t j = 0; j < f.factor_poly.size(); ++j)
        next[i + j] = mod(next[i + j] + prod[i] * f.factor_poly[j], m);
    prod = next;
  }
  EXPECT_EQ(prod, (std::vector<Integer>{mod(Integer(-2), m), 0, 0, 1}));
}

TEST(LocalFactors, NormEval) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  auto const f5 = padic_factor_degrees(*k, Integer(5));
  Integer const p(5);
  auto const v = local_norm_eval(f5[0], {PAdic::from_rational(1, p), PAdic::from_rational(1, p)});
  EXPECT_TRUE(v.congruent(PAdic::from_rational(-1, p)));
  EXPECT_EQ(v.normalized_abs(), 1);
  auto const z = local_norm_eval(f5[0], {PAdic::exact_zero(p), PAdic::exact_zero(p)});
  EXPECT_TRUE(z.is_exact_zero());
  auto const f7 = padic_factor_degrees(*k, Integer(7));
  auto const x = PAdic::from_rational(Rational(3, 4), Integer(7));
  EXPECT_TRUE(local_norm_eval(f7[0], {x}).congruent(x));
}

TEST(LocalFactors, LocalGlobalNormCompatibility) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (auto const& coeffs : {std::vector<long>{-2, 0, 0, 1}, std::vector<long>{-2, 0, 1},
                             std::vector<long>{-1, -1, 0, 0, 1}}) {
    auto const k = make_field(coeffs);
    for (long p : {5L, 7L, 31L}) {
      if (k->disc % p == 0) continue;
      auto const fs = padic_factor_degrees(*k, Integer(p), 16);
      for (int trial = 0; trial < 10; ++trial) {
        RationalVector a(k->degree);
        for (int i = 0; i < k->degree; ++i) a[i] = coord(rng);
        if (a.isZero()) continue;
        PAdic prod = PAdic::from_rational(1, Integer(p), 16);
        for (auto const& f : fs) prod = prod * local_norm_eval(f, local_image(f, a));
        Rational const global = norm_element(*k, FieldElement(k, a));
        if (global == 0) continue;
        PAdic const g = PAdic::from_rational(global, Integer(p), 16);
        EXPECT_TRUE(prod.congruent(g)) << to_string(prod) << " vs " << to_string(g);
        EXPECT_GE(std::min(prod.absolute_precision(), 16) - g.valuation(), 2);
      }
    }
  }
}
