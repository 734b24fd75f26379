#include <gtest/gtest.h>

#include <stdexcept>

#include "trigsum/hpreal.hpp"
#include "trigsum/rational.hpp"

using trigsum::HPReal;
using trigsum::Precision;
using trigsum::Rational;

TEST(Rational, Normalizes) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).frac(), Rational(1, 2));
  EXPECT_EQ(Rational(7, 2).mod(2), Rational(3, 2));
  EXPECT_EQ(Rational(-1, 3).mod(2), Rational(5, 3));
  EXPECT_EQ(Rational(-5, 3).str(), "-5/3");
  EXPECT_EQ(Rational(4).str(), "4");
}

TEST(Rational, OverflowIsReported) {
  Rational big(INT64_MAX / 2 + 1, 1);
  EXPECT_THROW(big * Rational(4), std::overflow_error);
}

TEST(HPReal, PrecisionFloor) {
  EXPECT_THROW(Precision(32), std::exception);
  EXPECT_EQ(Precision(64).bits, 64);
  EXPECT_EQ(Precision().bits, 256);
}

TEST(HPReal, ExactRationalsRoundTrip) {
  Precision p(256);
  HPReal a(Rational(1, 3), p);
  a *= 3;
  EXPECT_EQ(a.to_decimal(), "1");
  HPReal h = HPReal::parse("0.5", p);
  EXPECT_EQ(h, HPReal(Rational(1, 2), p));
  EXPECT_EQ(HPReal(p).to_decimal(), "0");
}

TEST(HPReal, TauScalesWithTermsAndPrecision) {
  Precision p(256);
  HPReal t1 = trigsum::tau(1, p), t8 = trigsum::tau(8, p);
  EXPECT_EQ(t8, t1 * 8);
  // 2^-224
  HPReal expect = trigsum::pow(HPReal(2, p), -224);
  EXPECT_EQ(t1, expect);
  EXPECT_LT(trigsum::tau(1000000, p), HPReal::parse("1e-50", p));
}
