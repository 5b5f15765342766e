#include <gtest/gtest.h>

#include "normlab/error.hpp"
#include "normlab/experiments.hpp"
#include "normlab/serialize.hpp"

using namespace normlab;

namespace {

RationalVector vec(std::vector<Rational> const& v) {
  RationalVector x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x[static_cast<int>(i)] = v[i];
  return x;
}

}  // namespace

TEST(Json, Rationals) {
  EXPECT_EQ(to_json(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(rational_from_json(Json("7/1")), 7);
  EXPECT_EQ(rational_from_json(to_json(Rational(22, 7))), Rational(22, 7));
}

TEST(Json, IntervalBallEnclosesValue) {
  Interval const x = interval_sqrt(2);
  Interval const back = interval_from_json(to_json(x));
  EXPECT_LE(back.lower(), x.lower());
  EXPECT_GE(back.upper(), x.upper());
  EXPECT_LT(back.rad(), Rational(1, 1000000000000LL));
}

TEST(Json, PadicRoundTrip) {
  auto const x = PAdic::from_rational(Rational(50, 3), Integer(5), 12);
  auto const y = padic_from_json(to_json(x));
  EXPECT_EQ(y.valuation(), 2);
  EXPECT_TRUE(y.congruent(x));
  auto const z = padic_from_json(to_json(PAdic::inexact_zero(Integer(7), 9)));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.absolute_precision(), 9);
}

TEST(Json, SFormRoundTrip) {
  auto const k = make_field(std::vector<long>{-2, 0, 1});
  for (auto const& f : {norm_sform(k, parse_places("inf,7")), quasi_norm_form(k, parse_places("inf,5"))}) {
    auto const g = sform_from_json(Json::parse(to_json(f).dump()));
    EXPECT_EQ(g.kind, f.kind);
    EXPECT_EQ(g.nvars(), f.nvars());
    EXPECT_EQ(g.field, f.field);
    ASSERT_EQ(g.components.size(), f.components.size());
    for (std::size_t i = 0; i < f.components.size(); ++i) {
      auto const& a = f.components[i];
      auto const& b = g.components[i];
      EXPECT_EQ(a.exact.has_value(), b.exact.has_value());
      if (a.exact) EXPECT_EQ(a.exact->terms(), b.exact->terms());
      ASSERT_EQ(a.padic.has_value(), b.padic.has_value());
      if (a.padic) {
        ASSERT_EQ(a.padic->terms().size(), b.padic->terms().size());
        for (auto const& [m, c] : a.padic->terms()) EXPECT_TRUE(c.congruent(b.padic->terms().at(m)));
      }
      // Decimal balls reload as enclosures of the original coefficients.
      ASSERT_EQ(a.real.has_value(), b.real.has_value());
      if (!a.real) continue;
      for (auto const& [m, c] : a.real->terms()) {
        auto const& d = b.real->terms().at(m);
        EXPECT_LE(d.lower(), c.lower());
        EXPECT_GE(d.upper(), c.upper());
      }
    }
  }
}

TEST(Json, RejectsForeignDocuments) {
  try {
    sform_from_json(Json::parse(R"({"format": "other"})"));
    FAIL();
  } catch (Error const&) {
  }
}

TEST(Json, ConfigHashIsStable) {
  EXPECT_EQ(config_hash("scan;height=50"), config_hash("scan;height=50"));
  EXPECT_NE(config_hash("scan;height=50"), config_hash("scan;height=51"));
  EXPECT_EQ(config_hash("").size(), 16u);
}

TEST(Alpha, Parsing) {
  auto const g = parse_alpha("golden");
  EXPECT_TRUE(g.value().overlaps(Interval(Rational(1618033988749894LL, 1000000000000000LL),
                                          Rational(1618033988749895LL, 1000000000000000LL))));
  EXPECT_FALSE(g.exact_square().has_value());
  EXPECT_EQ(*parse_alpha("sqrt:4").exact_square(), 4);
  EXPECT_EQ(*parse_alpha("quad:1,0,5,2").exact_square(), Rational(1, 4));
  for (auto const* bad : {"sqrt:", "quad:1,2", "pi", "sqrt:-3"}) {
    EXPECT_THROW(parse_alpha(bad), Error) << bad;
  }
}

TEST(Oppenheim, GoldenTwoVariables) {
  auto const row = oppenheim_min(parse_alpha("golden"), 2, 1000);
  // |x^2 - phi^2 y^2| is 1 at (1, 0); with y != 0 the least value is
  // |4 - phi^2| = (5 - sqrt5)/2 at (2, 1).
  EXPECT_TRUE(row.min_abs.contains(1));
  EXPECT_EQ(row.point, vec({1, 0}));
  Interval const expected = (Interval(5) - interval_sqrt(5)) / Interval(2);
  EXPECT_TRUE(row.min_abs_last_nonzero.overlaps(expected));
  EXPECT_LT(row.min_abs_last_nonzero.rad(), Rational(1, 1000000000));
  EXPECT_EQ(row.point_last_nonzero, vec({2, 1}));
  EXPECT_EQ(row.zeros, 0u);
}

TEST(Oppenheim, GoldenThreeVariables) {
  // Exhaustive float check: min over 0 < |(x,y,z)| <= 20 is 0.0031056200151...
  auto const row = oppenheim_min(parse_alpha("golden"), 3, 20);
  EXPECT_TRUE(row.min_abs.overlaps(Interval(Rational(31056200151LL, 10000000000000LL),
                                            Rational(31056200152LL, 10000000000000LL))));
  EXPECT_EQ(row.point, vec({19, 4, 12}));
}

TEST(Oppenheim, RationalSquareFindsZeros) {
  auto const row = oppenheim_min(parse_alpha("sqrt:4"), 2, 10);
  EXPECT_GT(row.zeros, 0u);
  EXPECT_TRUE(row.min_abs.contains(1));
}
