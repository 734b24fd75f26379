#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "trigsum/catalog.hpp"
#include "trigsum/errors.hpp"

using namespace trigsum;
using namespace trigsum::catalog;

namespace {

const Precision P(256);

ParamSet params(std::string_view id, std::map<std::string, std::int64_t> v, std::optional<PairList> pairs = {}) {
  RawParams raw;
  raw.values = std::move(v);
  raw.pairs = std::move(pairs);
  return validate_params(id, raw);
}

void expect_all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    EXPECT_TRUE(r.pass) << r.id << ' ' << r.params.str() << " err " << r.abs_err.to_decimal(5) << " leak "
                        << r.imag_leak.to_decimal(5);
}

}  // namespace

TEST(Registry, ContainsEveryId) {
  const auto& all = list_identities();
  EXPECT_GE(all.size(), 40u);
  std::set<std::string> ids;
  for (const auto& d : all) ids.insert(d.id);
  EXPECT_EQ(ids.size(), all.size());
  for (const char* id : {"I00", "I01", "I16", "I18a", "I18e", "I35a", "I35c", "I37", "I40", "A01", "A02"})
    EXPECT_TRUE(ids.count(id)) << id;
  for (int i = 0; i <= 40; ++i) {
    if (i == 18 || i == 35) continue;
    char buf[8];
    std::snprintf(buf, sizeof buf, "I%02d", i);
    EXPECT_TRUE(ids.count(buf)) << buf;
  }
  EXPECT_THROW(find_identity("I99"), DomainError);
}

TEST(Validate, Examples) {
  try {
    params("I01", {{"k", 4}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("k must be odd"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(params("I03", {{"n", 10}, {"j", 6}}));
  EXPECT_NO_THROW(params("I16", {{"k", 13}}, PairList{{3, 2}, {5, 1}, {6, 4}}));
  EXPECT_THROW(params("I16", {{"k", 13}}, PairList{{3, 2}, {5, 1}, {6, 3}}), DomainError);
  EXPECT_THROW(params("I01", {{"k", 5}, {"j", 2}}), DomainError);
  EXPECT_THROW(params("I03", {{"n", 10}}), DomainError);
  EXPECT_THROW(params("I24", {{"h", 2}, {"k", 4}, {"mu", 1}, {"alpha", 1}, {"beta", 1}}), DomainError);
  EXPECT_THROW(params("I29", {{"h", 3}, {"k", 6}, {"mu", 1}, {"alpha", 1}, {"beta", 1}}), DomainError);
  EXPECT_NO_THROW(params("I29", {{"h", 3}, {"k", 5}, {"mu", 1}, {"alpha", 0}, {"beta", 0}}));
  EXPECT_THROW(params("I35a", {{"h", 3}, {"k", 5}, {"mu", 1}, {"alpha", 0}, {"beta", 0}}), DomainError);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(eval_direct("I01", params("I01", {{"k", 3}}), P).re, HPReal(Rational(1, 2), P));
  EXPECT_EQ(*eval_closed("I01", params("I01", {{"k", 3}}), P).exact, Rational(1, 2));
  EXPECT_LE(abs(eval_direct("I14", params("I14", {{"k", 5}}), P).re - HPReal(1, P)), tau(2, P));
  EXPECT_LE(abs(eval_direct("I02", params("I02", {{"k", 5}}), P).re - HPReal(2, P)), tau(2, P));
  // (15/2)(4/5)(4/3)
  EXPECT_EQ(*eval_closed("I08", params("I08", {{"k", 15}}), P).exact, Rational(8));
  // 27 (1 - 1/9)
  EXPECT_EQ(*eval_closed("I09", params("I09", {{"k", 9}, {"j", 2}}), P).exact, Rational(24));
}

TEST(Verify, Examples) {
  auto r6 = verify("I06", params("I06", {{"n", 9}, {"j", 2}}), P);
  EXPECT_TRUE(r6.pass);
  EXPECT_TRUE(r6.rhs.is_zero());

  auto r38 = verify("I38", params("I38", {{"h", 2}, {"k", 3}}), P);
  EXPECT_TRUE(r38.pass);
  ASSERT_TRUE(r38.exact_residual);
  EXPECT_EQ(*r38.exact_residual, Rational(0));

  auto r13 = verify("I13", params("I13", {{"Q", 3}}), P);
  EXPECT_TRUE(r13.pass);
  EXPECT_EQ(r13.lhs, HPReal(Rational(-1, 2), P));
  EXPECT_EQ(r13.rhs, HPReal(Rational(-1, 2), P));

  auto r24 = verify("I24", params("I24", {{"h", 3}, {"k", 4}, {"mu", 5}, {"alpha", 1}, {"beta", 1}}), P);
  EXPECT_TRUE(r24.pass);

  auto r33 = verify("I33", params("I33", {{"h", 3}, {"k", 5}, {"mu", 7}}), P);
  EXPECT_TRUE(r33.pass);
  EXPECT_EQ(r33.rhs, HPReal(56, P));
}

TEST(Verify, ToleranceOverrideAndPassRule) {
  auto ps = params("I00", {{"n", 7}});
  VerifyOptions strict;
  strict.tol = HPReal(P);
  auto r = verify("I00", ps, P, strict);
  EXPECT_EQ(r.pass, r.abs_err.is_zero() && r.imag_leak.is_zero());
  auto d = verify("I00", ps, P);
  EXPECT_EQ(d.tol, tau(d.terms, P));
  EXPECT_EQ(d.pass, d.abs_err <= d.tol && d.imag_leak <= d.tol);
}

TEST(Sweep, GridExamples) {
  auto r1 = sweep("I01", 9, P);
  ASSERT_EQ(r1.reports.size(), 4u);
  std::vector<std::int64_t> ks;
  for (auto& r : r1.reports) ks.push_back(r.params["k"]);
  EXPECT_EQ(ks, (std::vector<std::int64_t>{3, 5, 7, 9}));
  expect_all_pass(r1.reports);

  auto r19 = sweep("I19", 5, P);
  std::set<std::pair<std::int64_t, std::int64_t>> got;
  for (auto& r : r19.reports) got.emplace(r.params["p"], r.params["q"]);
  for (auto pq : {std::pair<std::int64_t, std::int64_t>{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 2}})
    EXPECT_TRUE(got.count(pq));
  EXPECT_FALSE(got.count({2, 4}));
  expect_all_pass(r19.reports);

  auto r16 = sweep("I16", 13, P);
  EXPECT_TRUE(r16.reports.empty());
  EXPECT_FALSE(r16.note.empty());
}

TEST(Sweep, ParallelMatchesSerial) {
  for (const char* id : {"I20", "I24", "I35b"}) {
    VerifyOptions opt;
    opt.jobs = 3;
    auto a = sweep(id, 7, P, opt), b = sweep_serial(id, 7, P);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      EXPECT_EQ(a.reports[i].params, b.reports[i].params);
      EXPECT_EQ(a.reports[i].lhs, b.reports[i].lhs);
      EXPECT_EQ(a.reports[i].abs_err, b.reports[i].abs_err);
    }
  }
}

TEST(Sweep, LexicographicOrder) {
  auto g = grid("I24", 6);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  for (const auto& ps : g) EXPECT_NO_THROW(validate_params("I24", RawParams{{{"h", ps["h"]}, {"k", ps["k"]}, {"mu", ps["mu"]}, {"alpha", ps["alpha"]}, {"beta", ps["beta"]}}, std::nullopt}));
}

TEST(PairSearch, Examples) {
  auto f13 = search_pair_families(13);
  EXPECT_TRUE(std::find(f13.begin(), f13.end(), PairList{{3, 2}, {5, 1}, {6, 4}}) != f13.end());
  auto f17 = search_pair_families(17);
  EXPECT_TRUE(std::find(f17.begin(), f17.end(), PairList{{4, 1}, {5, 3}, {7, 6}, {8, 2}}) != f17.end());
  EXPECT_TRUE(std::is_sorted(f17.begin(), f17.end()));
  for (const auto& fam : search_pair_families(5)) {
    EXPECT_TRUE(pair_family_covers(5, fam));
    EXPECT_EQ(fam.size(), 1u);
  }
  EXPECT_THROW(search_pair_families(7), DomainError);
  EXPECT_THROW(search_pair_families(1), DomainError);
}

TEST(PairSearch, EveryFamilyValidatesAndVerifies) {
  for (std::int64_t k : {5, 13, 17, 29}) {
    std::size_t n = 0, failed = 0;
    visit_pair_families(k, [&](const PairList& fam) {
      ++n;
      ParamSet ps = params("I16", {{"k", k}}, fam);
      auto r = verify("I16", ps, P);
      if (!r.pass) ++failed;
    });
    EXPECT_GT(n, 0u) << k;
    EXPECT_EQ(failed, 0u) << k;
    if (k == 29) EXPECT_EQ(n, 17297280u);
  }
}

TEST(Golden, PrintedCorollaries) {
  HPReal lim = HPReal::parse("1e-50", P);
  for (const auto& g : golden_values()) {
    HPReal d = abs(golden_lhs(g, P) - golden_rhs(g, P));
    EXPECT_LT(d, lim) << g.name;
  }
}

TEST(Golden, PairTheoremOrientation) {
  // Printed k=13 double-quotient form equals +1; the theorem's own sum with
  // the printed pairs equals -1.
  auto r13 = verify("I16", params("I16", {{"k", 13}}, PairList{{3, 2}, {5, 1}, {6, 4}}), P);
  EXPECT_TRUE(r13.pass);
  EXPECT_EQ(r13.rhs, HPReal(-1, P));
  auto r17 = verify("I16", params("I16", {{"k", 17}}, PairList{{5, 3}, {8, 2}, {4, 1}, {7, 6}}), P);
  EXPECT_TRUE(r17.pass);
  EXPECT_EQ(r17.rhs, HPReal(-1, P));
}

TEST(Corollaries, ClassicInstances) {
  EXPECT_TRUE(verify("I14", params("I14", {{"k", 17}}), P).pass);
  EXPECT_TRUE(verify("I14", params("I14", {{"k", 13}}), P).pass);
  EXPECT_TRUE(verify("I15", params("I15", {{"n", 3}, {"m", 5}, {"a", 1}}), P).pass);
  EXPECT_THROW(params("I15", {{"n", 3}, {"m", 5}, {"a", 5}}), DomainError);
}

TEST(Errors, SingularTermOnInvalidDirectCall) {
  // bypasses validation: h | alpha makes a cotangent singular
  ParamSet bad{{"h", "k", "mu", "alpha", "beta"}, {3, 4, 1, 3, 1}, {}};
  EXPECT_THROW(eval_direct("I24", bad, P), SingularTerm);
}
