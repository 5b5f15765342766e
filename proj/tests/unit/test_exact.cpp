#include <gtest/gtest.h>

#include "normlab/error.hpp"
#include "normlab/linalg.hpp"
#include "normlab/modular.hpp"
#include "normlab/number_field.hpp"
#include "normlab/sturm.hpp"

using namespace normlab;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("5")), "5/1");
  EXPECT_EQ(parse_decimal("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_decimal("-1.5e-3"), Rational(-3, 2000));
  EXPECT_EQ(parse_decimal("2E2"), Rational(200));
  EXPECT_EQ(code_of([] { parse_decimal("1.2.3"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::kParseError);
  EXPECT_EQ(parse_rational("010"), Rational(10));
}

TEST(Rationals, Valuations) {
  EXPECT_EQ(valuation(Rational(12, 5), Integer(2)), 2);
  EXPECT_EQ(valuation(Rational(12, 5), Integer(5)), -1);
  EXPECT_EQ(legendre(Integer(2), Integer(7)), 1);
  EXPECT_EQ(legendre(Integer(3), Integer(7)), -1);
}

TEST(Polynomials, Discriminants) {
  EXPECT_EQ(discriminant(from_integers(std::vector<long>{-2, 0, 1})), Rational(8));
  EXPECT_EQ(discriminant(from_integers(std::vector<long>{-2, 0, 0, 1})), Rational(-108));
  EXPECT_EQ(discriminant(from_integers(std::vector<long>{1, 0, 0, 0, 1})), Rational(256));
  EXPECT_EQ(discriminant(from_integers(std::vector<long>{-1, -1, 0, 0, 1})), Rational(-283));
  EXPECT_EQ(discriminant(from_integers(std::vector<long>{-1, -1, 0, 0, 0, 1})), Rational(2869));
}

TEST(NumberFields, Construction) {
  auto const k = make_field(std::vector<long>{-2, 0, 0, 1});
  EXPECT_EQ(k->degree, 3);
  EXPECT_EQ(k->disc, -108);
  EXPECT_EQ(code_of([] { make_field(std::vector<long>{-1, 0, 1}); }), ErrorCode::kReducible);
  EXPECT_EQ(code_of([] { make_field(std::vector<long>{1, 2, 1}); }), ErrorCode::kReducible);
  EXPECT_EQ(code_of([] { make_field(std::vector<long>{1, 0, 2}); }), ErrorCode::kNotMonic);
}

TEST(NumberFields, SwinnertonDyerStyleNeedsRecombination) {
  // t^4 + 1 splits into quadratics modulo every prime.
  auto const k = make_field(std::vector<long>{1, 0, 0, 0, 1});
  EXPECT_TRUE(k->certificate.recombination);
  // (t^2 + 1)(t^2 - 2)
  EXPECT_EQ(code_of([] { make_field(std::vector<long>{-2, 0, -1, 0, 1}); }), ErrorCode::kReducible);
  EXPECT_FALSE(make_field(std::vector<long>{-1, 0, -1, 0, 1})->certificate.recombination);
  // (t^2 - t - 1)(t^2 + t - 1) = t^4 - 3t^2 + 1
  EXPECT_EQ(code_of([] { make_field(std::vector<long>{1, 0, -3, 0, 1}); }), ErrorCode::kReducible);
}

TEST(NumberFields, Norms) {
  auto const k = make_field(std::vector<long>{-2, 0, 0, 1});
  auto const a = FieldElement::one(k) + FieldElement::basis(k, 1);
  EXPECT_EQ(norm_element(*k, a), Rational(3));
  auto const t = FieldElement::basis(k, 1);
  EXPECT_EQ(t * t * t, FieldElement::one(k) + FieldElement::one(k));
  EXPECT_EQ(norm_element(*k, t), Rational(2));
}

TEST(Linalg, SubsetDeterminantMatchesGauss) {
  RationalMatrix m(4, 4);
  m << 2, -1, 0, 3, 1, 4, -2, 0, 0, 5, 1, 1, 7, 0, -3, 2;
  SquareArray<Rational> a(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);
  EXPECT_EQ(subset_determinant(a, Rational(1)), determinant(m));
  EXPECT_EQ(determinant(m), Rational(-178));
  RationalMatrix const inv = inverse(m);
  EXPECT_EQ(m * inv, RationalMatrix::Identity(4, 4));
  RationalMatrix s(2, 2);
  s << 1, 2, 2, 4;
  EXPECT_EQ(code_of([&] { inverse(s); }), ErrorCode::kSingularMatrix);
}

TEST(Modular, FactorAndLift) {
  Integer const p(5);
  auto const f = modp::reduce({1, 0, 0, 0, 1}, p);
  auto const factors = modp::factor_squarefree(f, p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(modp::degree(factors[0]), 2);
  auto const lifted = modp::hensel_lift({1, 0, 0, 0, 1}, factors, p, 8);
  Integer const m = pow(p, 8u);
  auto const prod = modp::mul(lifted[0], lifted[1], m);
  EXPECT_EQ(prod, modp::reduce({1, 0, 0, 0, 1}, m));
  EXPECT_EQ(modp::factor_degrees(modp::reduce({-1, -1, 0, 0, 1}, Integer(2)), Integer(2)),
            (std::vector<int>{4}));
}

TEST(Sturm, CountsAndRefines) {
  auto const p = from_integers(std::vector<long>{-1, -1, 0, 0, 1});
  auto const iso = sturm_real_roots(p);
  EXPECT_EQ(iso.count, 2);
  auto const r = refine_root(p, iso.intervals[1], 60);
  EXPECT_LE(r.second - r.first, Rational(1, Integer(1) << 60));
  EXPECT_NEAR(static_cast<double>(r.first), 1.2207440846057596, 1e-15);
  EXPECT_EQ(sturm_real_roots(from_integers(std::vector<long>{1, 0, 0, 0, 1})).count, 0);
  auto const exact = sturm_real_roots(from_integers(std::vector<long>{0, -1, 0, 1}));
  EXPECT_EQ(exact.count, 3);
}
