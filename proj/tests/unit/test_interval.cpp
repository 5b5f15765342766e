#include <gtest/gtest.h>

#include "normlab/error.hpp"
#include "normlab/interval.hpp"

using namespace normlab;

TEST(Interval, EnclosesExactValues) {
  Interval const third(Rational(1, 3));
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_FALSE(third.is_point());
  Interval const two = sqr(sqrt(Interval(2)));
  EXPECT_TRUE(two.contains(Rational(2)));
  EXPECT_LT(two.rad(), Rational(1, Integer(1) << 120));
}

TEST(Interval, Arithmetic) {
  Interval const a(Rational(-1), Rational(2));
  Interval const b(Rational(3), Rational(4));
  Interval const p = a * b;
  EXPECT_EQ(p.lower(), Rational(-4));
  EXPECT_EQ(p.upper(), Rational(8));
  EXPECT_EQ(sqr(a).lower(), 0);
  EXPECT_EQ(sqr(a).upper(), 4);
  EXPECT_EQ(abs(a).upper(), 2);
  EXPECT_THROW(b / a, Error);
  EXPECT_THROW(log(a), Error);
  Interval const q = b / Interval(Rational(2));
  EXPECT_EQ(q.lower(), Rational(3, 2));
  EXPECT_EQ(pow(Interval(Rational(-2)), 3).upper(), -8);
  EXPECT_TRUE(root(Interval(27), 3).contains(Rational(3)));
  EXPECT_TRUE(log(exp(Interval(1))).contains(Rational(1)));
}

TEST(Interval, PrecisionGuard) {
  {
    PrecisionGuard g(64);
    EXPECT_EQ(Interval(1).precision(), 64);
  }
  EXPECT_EQ(Interval(1).precision(), default_precision());
}

TEST(Interval, DecimalRoundTrip) {
  EXPECT_EQ(decimal_string(Rational(1, 8), 5), "1.25e-1");
  EXPECT_EQ(decimal_string(Rational(-1234), 2, 0), "-1.2e3");
  EXPECT_EQ(decimal_string(Rational(999, 100), 2, 1), "1e1");
  EXPECT_EQ(decimal_string(Rational(1, 3), 3, 1), "3.34e-1");
  EXPECT_EQ(decimal_string(Rational(-1, 3), 3, -1), "-3.34e-1");
  Interval const x = sqrt(Interval(5));
  auto const ball = to_decimal_ball(x);
  Interval const back = from_decimal_ball(ball);
  EXPECT_LE(back.lower(), x.lower());
  EXPECT_GE(back.upper(), x.upper());
}

TEST(ComplexInterval, Modulus) {
  ComplexInterval const z(Interval(3), Interval(4));
  EXPECT_TRUE(abs(z).contains(Rational(5)));
  EXPECT_TRUE(abs2(z * conj(z)).contains(Rational(625)));
  ComplexInterval const w = z / z;
  EXPECT_TRUE(w.re().contains(Rational(1)));
  EXPECT_TRUE(w.im().contains(Rational(0)));
}
