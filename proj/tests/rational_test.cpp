#include <random>

#include <gtest/gtest.h>

#include "pareto/rational.hpp"

using pareto::Rational;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse("-2.75"), Rational(-11, 4));
  EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "0.1.2", "3/", "/3", "1e5"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(-6, 3).str(), "-2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, ArithmeticIsExact) {
  Rational tenth(1, 10);
  Rational sum(0);
  for (int i = 0; i < 10; ++i) sum += tenth;
  EXPECT_EQ(sum, Rational(1));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OrdersByValue) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Rational, StringRoundTripProperty) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 100000);
  for (int i = 0; i < 2000; ++i) {
    Rational x(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(x.str()), x);
  }
}

TEST(Rational, LargeValuesDoNotOverflow) {
  Rational big(INT64_MAX);
  EXPECT_EQ((big * big / big), big);
  EXPECT_GT(big + Rational(1), big);
}
