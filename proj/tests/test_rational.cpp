#include <gtest/gtest.h>

#include <stdexcept>

#include "nikodym/errors.hpp"
#include "nikodym/rational.hpp"

using nikodym::Rational;

TEST(Rational, StoredInLowestTermsWithPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
}

TEST(Rational, IntegersPrintWithUnitDenominator) {
  EXPECT_EQ(Rational(3).str(), "3/1");
  EXPECT_EQ(Rational(0).str(), "0/1");
}

TEST(Rational, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(Rational::parse("1/10"), Rational(1, 10));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse("-2.50"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
  EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse(" 3/4 "), Rational(3, 4));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "0.1.2", "1/2/3", "4/-6", "e5"}) {
    EXPECT_THROW(Rational::parse(bad), nikodym::InvalidInput) << bad;
  }
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 6) - Rational(1, 3), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OrdersLikeTheRealLine) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(nikodym::max(Rational(1, 3), Rational(2, 7)), Rational(1, 3));
  EXPECT_EQ(nikodym::abs(Rational(-5, 7)), Rational(5, 7));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(1, 3).decimal(5), "0.33333");
  EXPECT_EQ(Rational(2, 3).decimal(5), "0.66667");
  EXPECT_EQ(Rational(1, 4).decimal(), "0.25");
  EXPECT_EQ(Rational(-1, 8).decimal(), "-0.125");
  EXPECT_EQ(Rational(5).decimal(), "5");
  EXPECT_EQ(Rational(1, 2).fixed(3), "0.500");
  EXPECT_EQ(Rational(2, 3).fixed(2), "0.67");
}
