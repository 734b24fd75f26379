#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "trigsum/catalog.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/quadfield.hpp"

using namespace trigsum;
using namespace trigsum::quadfield;

namespace {
const Precision P(256);
}

TEST(QuadField, ClassNumbers) {
  EXPECT_EQ(dirichlet_class_number(13, P), 1);
  EXPECT_EQ(dirichlet_class_number(17, P), 1);
  EXPECT_EQ(dirichlet_class_number(5, P), 1);
  // Q(sqrt 229) has class number 3
  EXPECT_EQ(dirichlet_class_number(229, P), 3);
  EXPECT_THROW(dirichlet_class_number(11, P), DomainError);
}

TEST(QuadField, ResiduesBySquaring) {
  auto r = quadratic_residues(13);
  std::vector<int> got;
  for (int i = 0; i < 13; ++i)
    if (r[i]) got.push_back(i);
  EXPECT_EQ(got, (std::vector<int>{1, 3, 4, 9, 10, 12}));
}

TEST(QuadField, SineRatioCorollaries) {
  HPReal R13 = residue_sine_ratio(13, P);
  HPReal one(1, P);
  EXPECT_LE(abs(R13 - one / R13 - HPReal(3, P)), tau(12, P));
  EXPECT_LE(abs(R13 + one / R13 - sqrt(HPReal(13, P))), tau(12, P));
  HPReal R17 = residue_sine_ratio(17, P);
  EXPECT_LE(abs(R17 - one / R17 - HPReal(8, P)), tau(16, P));
  EXPECT_LE(abs(R17 + one / R17 - sqrt(HPReal(68, P))), tau(16, P));
}

TEST(QuadField, RatioDoubleOracle) {
  double num = 1, den = 1;
  for (int j = 1; j < 7; ++j) {
    bool res = false;
    for (int x = 1; x < 13; ++x) res = res || (x * x % 13 == j);
    (res ? den : num) *= std::sin(std::numbers::pi * j / 13);
  }
  EXPECT_NEAR(residue_sine_ratio(13, P).to_double(), num / den, 1e-13);
}

TEST(QuadField, I17BothSignsAndConsistency) {
  for (std::int64_t p : {5, 13, 17, 29, 37, 41}) {
    HPReal R = residue_sine_ratio(p, P);
    EXPECT_GT(R, HPReal(1, P)) << p;
    HPReal one(1, P);
    HPReal m = R - one / R, s = R + one / R;
    EXPECT_LE(abs(m * m + 4 - s * s), tau(4 * p, P));
    for (std::int64_t sign : {-1, 1}) {
      catalog::RawParams raw;
      raw.values = {{"p", p}, {"sign", sign}};
      auto r = catalog::verify("I17", catalog::validate_params("I17", raw), P);
      EXPECT_TRUE(r.pass) << p << ' ' << sign << ' ' << r.abs_err.to_decimal(5);
    }
  }
}

TEST(QuadField, DataBundle) {
  auto q = quadfield_data(17, P);
  EXPECT_EQ(q.epsilon.x, 8);
  EXPECT_EQ(q.epsilon.y, 2);
  EXPECT_EQ(q.class_number, 1);
  HPReal e = unit_value(q.epsilon, 17, P);
  EXPECT_LE(abs(e - (HPReal(4, P) + sqrt(HPReal(17, P)))), tau(1, P));
}
