#include <gtest/gtest.h>

#include "soliton/error.hpp"
#include "soliton/rational.hpp"
#include "support.hpp"

using namespace soliton;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.2.3"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, PrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_EQ(exact_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST(Rational, Pow) {
  EXPECT_EQ(pow(Rational(-1, 2), 3), Rational(-1, 8));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

TEST(RationalProperty, PrintParseRoundTrip) {
  auto r = test::rng(1);
  for (int i = 0; i < 500; ++i) {
    const Rational q = r.rational(50, 30);
    EXPECT_EQ(parse_rational(to_string(q)), q) << test::seed_note();
    EXPECT_EQ(exact_sqrt(q * q), Rational(abs(q))) << test::seed_note();
  }
}
