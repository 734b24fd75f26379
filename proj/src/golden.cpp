#include "trigsum/catalog.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::catalog {

namespace {

SineQuotient q(int sign, std::vector<std::int64_t> num, std::vector<std::int64_t> den) {
  return SineQuotient{sign, std::move(num), std::move(den)};
}

std::vector<GoldenValue> build() {
  std::vector<GoldenValue> g;
  g.push_back({"k17-single-quotients", 17,
               {q(+1, {6}, {3}), q(-1, {4}, {2}), q(-1, {8}, {4}), q(+1, {2}, {1}), q(+1, {7}, {5}),
                q(-1, {5}, {6}), q(+1, {3}, {7}), q(-1, {1}, {8})},
               Rational(1), 1});
  g.push_back({"k13-single-quotients", 13,
               {q(+1, {4}, {2}), q(-1, {6}, {3}), q(-1, {2}, {1}), q(+1, {5}, {4}), q(-1, {3}, {5}),
                q(+1, {1}, {6})},
               Rational(-1), 1});
  g.push_back({"k15-a1-n3-m5", 15, {q(+1, {2}, {1}), q(-1, {7}, {4}), q(-1, {3}, {6})}, Rational(0), 1});
  g.push_back({"k17-double-quotients", 17,
               {q(+1, {6, 7}, {3, 5}), q(+1, {4, 1}, {2, 8}), q(-1, {8, 2}, {4, 1}), q(-1, {5, 3}, {6, 7})},
               Rational(-1), 1});
  g.push_back({"k13-double-quotients", 13,
               {q(+1, {4, 6}, {2, 3}), q(-1, {2, 3}, {1, 5}), q(-1, {5, 1}, {4, 6})}, Rational(1), 1});

  // R = sin6 sin2 sin5 / (sin4 sin3 sin1) over 13; R - 1/R and R + 1/R
  std::vector<std::int64_t> r13n{6, 2, 5}, r13d{4, 3, 1};
  g.push_back({"p13-difference", 13, {q(+1, r13n, r13d), q(-1, r13d, r13n)}, Rational(3), 1});
  g.push_back({"p13-sum", 13, {q(+1, r13n, r13d), q(+1, r13d, r13n)}, Rational(1), 13});
  std::vector<std::int64_t> r17n{3, 5, 6, 7}, r17d{1, 2, 4, 8};
  g.push_back({"p17-difference", 17, {q(+1, r17n, r17d), q(-1, r17d, r17n)}, Rational(8), 1});
  g.push_back({"p17-sum", 17, {q(+1, r17n, r17d), q(+1, r17d, r17n)}, Rational(2), 17});
  return g;
}

}  // namespace

const std::vector<GoldenValue>& golden_values() {
  static const std::vector<GoldenValue> g = build();
  return g;
}

HPReal golden_lhs(const GoldenValue& g, Precision p) {
  HPReal s(p);
  for (const auto& t : g.terms) {
    HPReal v(1, p);
    for (auto u : t.num) v *= sin_pi(Rational(u, g.k), p);
    for (auto u : t.den) v /= sin_pi(Rational(u, g.k), p);
    if (t.sign < 0)
      s -= v;
    else
      s += v;
  }
  return s;
}

HPReal golden_rhs(const GoldenValue& g, Precision p) {
  HPReal r(g.coefficient, p);
  if (g.radicand != 1) r *= sqrt(HPReal(g.radicand, p));
  return r;
}

}  // namespace trigsum::catalog
