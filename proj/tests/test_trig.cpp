#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "trigsum/errors.hpp"
#include "trigsum/trig.hpp"

using namespace trigsum;

namespace {
const Precision P(256);

HPReal tau1() { return tau(1, P); }

void near(const HPReal& a, const HPReal& b, std::size_t n = 4) { EXPECT_LE(abs(a - b), tau(n, P)) << a.to_decimal(30) << " vs " << b.to_decimal(30); }
}  // namespace

TEST(Trig, ForcedValuesAreExact) {
  EXPECT_EQ(sin_pi(Rational(1, 2), P), HPReal(1, P));
  EXPECT_EQ(sin_pi(Rational(1, 6), P), HPReal(Rational(1, 2), P));
  EXPECT_EQ(sin_pi(Rational(5, 6), P), HPReal(Rational(1, 2), P));
  EXPECT_EQ(sin_pi(Rational(-1, 6), P), HPReal(Rational(-1, 2), P));
  EXPECT_EQ(cos_pi(Rational(1, 2), P), HPReal(P));
  EXPECT_EQ(cos_pi(Rational(1), P), HPReal(-1, P));
  EXPECT_EQ(cos_pi(Rational(1, 3), P), HPReal(Rational(1, 2), P));
  EXPECT_EQ(cot_pi(Rational(1, 4), P), HPReal(1, P));
  EXPECT_EQ(tan_pi(Rational(3, 4), P), HPReal(-1, P));
  EXPECT_EQ(cot_pi(Rational(1, 2), P), HPReal(P));
  EXPECT_EQ(sin_pi(Rational(7), P), HPReal(P));
}

TEST(Trig, SingularitiesThrowWithReducedArgument) {
  EXPECT_THROW(cot_pi(Rational(0), P), SingularTerm);
  EXPECT_THROW(csc_pi(Rational(3), P), SingularTerm);
  EXPECT_THROW(tan_pi(Rational(1, 2), P), SingularTerm);
  EXPECT_THROW(sec_pi(Rational(-3, 2), P), SingularTerm);
  try {
    tan_pi(Rational(5, 2), P);
    FAIL();
  } catch (const SingularTerm& e) {
    EXPECT_EQ(e.at(), Rational(1, 2));
  }
  EXPECT_NO_THROW(tan_pi(Rational(1, 3), P));
}

TEST(Trig, AgreesWithLongDouble) {
  for (std::int64_t d = 1; d <= 40; ++d) {
    for (std::int64_t n = -3 * d; n <= 3 * d; ++n) {
      Rational r(n, d);
      long double x = std::numbers::pi_v<long double> * n / d;
      EXPECT_NEAR(sin_pi(r, P).to_double(), std::sin(x), 1e-15);
      EXPECT_NEAR(cos_pi(r, P).to_double(), std::cos(x), 1e-15);
    }
  }
}

TEST(Trig, KnownIrrationalValues) {
  HPReal s3 = sqrt(HPReal(3, P));
  near(sin_pi(Rational(1, 3), P), s3 / 2);
  near(tan_pi(Rational(1, 6), P), HPReal(1, P) / s3);
  near(cot_pi(Rational(1, 6), P), s3);
  near(csc_pi(Rational(1, 4), P), sqrt(HPReal(2, P)));
  // sin(pi/10) = (sqrt5 - 1)/4
  near(sin_pi(Rational(1, 10), P), (sqrt(HPReal(5, P)) - 1) / 4);
}

TEST(Trig, SymmetriesHoldExactly) {
  for (std::int64_t d = 2; d <= 30; ++d) {
    for (std::int64_t n = 1; n < d; ++n) {
      Rational r(n, d);
      EXPECT_EQ(sin_pi(Rational(1) - r, P), sin_pi(r, P));
      EXPECT_EQ(sin_pi(-r, P), -sin_pi(r, P));
      EXPECT_EQ(cos_pi(r + Rational(2), P), cos_pi(r, P));
    }
  }
}

TEST(Roots, Examples) {
  HPComplex i = root_of_unity(1, 4, P);
  EXPECT_TRUE(i.re.is_zero());
  EXPECT_EQ(i.im, HPReal(1, P));
  HPComplex one = root_of_unity(7, 7, P);
  EXPECT_EQ(one.re, HPReal(1, P));
  EXPECT_TRUE(one.im.is_zero());
  HPComplex w = root_of_unity(1, 3, P);
  EXPECT_EQ(w.re, HPReal(Rational(-1, 2), P));
  near(w.im, sqrt(HPReal(3, P)) / 2);
  // exponent reduced first
  HPComplex a = root_of_unity(-5, 12, P), b = root_of_unity(7, 12, P);
  EXPECT_EQ(a.re, b.re);
  EXPECT_EQ(a.im, b.im);
  near(abs(root_of_unity(3, 11, P)), HPReal(1, P), 1);
}

TEST(Roots, ExactSingularityClassification) {
  EXPECT_EQ(is_root_one_or_minus_one(6, 3), RootKind::One);
  EXPECT_EQ(is_root_one_or_minus_one(2, 4), RootKind::MinusOne);
  EXPECT_EQ(is_root_one_or_minus_one(1, 3), RootKind::Neither);
  EXPECT_EQ(is_root_one_or_minus_one(-3, 6), RootKind::MinusOne);
  EXPECT_EQ(is_root_one_or_minus_one(0, 1), RootKind::One);
  EXPECT_EQ(is_root_one_or_minus_one(5, 10), RootKind::MinusOne);
  EXPECT_EQ(is_root_one_or_minus_one(5, 9), RootKind::Neither);
  EXPECT_EQ(mod_floor(-1, 5), 4);
  (void)tau1;
}
