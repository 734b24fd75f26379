// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigsum/catalog.hpp"
#include "trigsum/cli.hpp"
#include "trigsum/dedekind.hpp"
#include "trigsum/ntheory.hpp"
#include "trigsum/quadfield.hpp"
#include "trigsum/rhcriterion.hpp"
#include "trigsum/trig.hpp"

using namespace trigsum;
using Clock = std::chrono::steady_clock;

namespace {

const Precision P(256);

HPReal lim50() { return HPReal::parse("1e-50", P); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects the first few problems of a criterion.
struct Check {
  std::vector<std::string> problems;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty(); }
};

bool sweep_passes(Check& c, const std::string& id, std::int64_t bound) {
  auto r = catalog::sweep(id, bound, P);
  c.expect(!r.reports.empty(), id + ": empty grid");
  for (const auto& x : r.reports)
    c.expect(x.pass && x.abs_err < lim50() && x.imag_leak < lim50(),
             id + " " + x.params.str() + " err " + x.abs_err.to_decimal(4));
  return c.ok();
}

std::string crit1(Check& c) {
  auto t = Clock::now();
  const char* argv[] = {"trigsum", "--jobs", "1", "--format", "json", "verify", "all", "--bound", "20"};
  std::ostringstream out, err;
  int code = run_cli(9, argv, out, err);
  double secs = seconds_since(t);
  c.expect(code == 0, "exit code " + std::to_string(code) + " " + err.str());
  std::size_t total = 0, ids = 0;
  if (code == 0 || code == 1) {
    auto j = nlohmann::json::parse(out.str());
    for (const auto& row : j["identities"]) {
      ++ids;
      std::string id = row["id"];
      total += row["total"].get<std::size_t>();
      c.expect(row["total"].get<std::size_t>() > 0, id + ": no parameter sets");
      c.expect(row["passed"] == row["total"], id + ": failures");
      c.expect(HPReal::parse(row["max_abs_err"], P) < lim50(), id + ": abs_err");
      c.expect(HPReal::parse(row["max_imag_leak"], P) < lim50(), id + ": imag_leak");
    }
  }
  c.expect(ids == catalog::list_identities().size(), "identity count");
  c.expect(secs < 600, "runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << ids << " identities, " << total << " reports, " << std::fixed << std::setprecision(1) << secs << " s";
  return s.str();
}

std::string crit2(Check& c) {
  for (const char* id : {"I00", "I01", "I02", "A01", "A02", "I07", "I08", "I09", "I12", "I14"}) sweep_passes(c, id, 101);
  for (const char* id : {"I03", "I04", "I05", "I06", "I10", "I11"}) sweep_passes(c, id, 60);
  return std::to_string(c.count) + " reports";
}

std::string crit3(Check& c) {
  for (const auto& g : catalog::golden_values())
    c.expect(abs(catalog::golden_lhs(g, P) - catalog::golden_rhs(g, P)) < lim50(), g.name);
  auto pairs_check = [&](std::int64_t k, catalog::PairList pairs) {
    catalog::RawParams raw;
    raw.values["k"] = k;
    raw.pairs = pairs;
    auto r = catalog::verify("I16", catalog::validate_params("I16", raw), P);
    c.expect(r.pass && r.rhs == HPReal(-1, P) && abs(r.lhs + 1) < lim50(), "I16 k=" + std::to_string(k));
  };
  pairs_check(13, {{3, 2}, {5, 1}, {6, 4}});
  pairs_check(17, {{5, 3}, {8, 2}, {4, 1}, {7, 6}});
  return std::to_string(c.count) + " values";
}

std::string crit4(Check& c) {
  for (std::int64_t k = 3; k <= 200; ++k)
    for (std::int64_t h = 2; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      catalog::ParamSet ps{{"h", "k"}, {h, k}, {}};
      auto r = catalog::verify("I38", ps, P);
      c.expect(r.pass && r.exact_residual && *r.exact_residual == Rational(0),
               "I38 " + ps.str());
    }
  std::size_t n38 = c.count;
  sweep_passes(c, "I39", 100);
  return std::to_string(n38) + " reciprocity pairs, " + std::to_string(c.count - n38) + " cot-form pairs";
}

std::string crit5(Check& c) {
  sweep_passes(c, "I19", 30);
  for (const char* id : {"I20", "I21", "I22", "I23"}) sweep_passes(c, id, 25);
  for (const char* id : {"I24", "I25", "I26", "I27", "I28", "I29", "I30", "I31", "I32", "I33", "I34", "I35a",
                         "I35b", "I35c", "I36", "I37"})
    sweep_passes(c, id, 15);
  return std::to_string(c.count) + " reports";
}

std::string crit6(Check& c) {
  auto r = catalog::sweep("I40", 12, P);
  for (const auto& x : r.reports) c.expect(x.pass, "I40 " + x.params.str());
  c.expect(!r.reports.empty(), "empty");
  return std::to_string(r.reports.size()) + " (alpha, beta, h, k)";
}

std::string crit7(Check& c) {
  auto u13 = ntheory::pell_fundamental_unit(13), u17 = ntheory::pell_fundamental_unit(17);
  c.expect(u13.x == 3 && u13.y == 1 && u13.half, "unit 13");
  c.expect(u17.x == 8 && u17.y == 2 && !u17.half, "unit 17");
  c.expect(quadfield::dirichlet_class_number(13, P) == 1, "h(13)");
  c.expect(quadfield::dirichlet_class_number(17, P) == 1, "h(17)");
  HPReal guard = HPReal::parse("1e-8", P);
  int primes = 0;
  for (std::int64_t p = 5; p < 500; p += 4) {
    if (!ntheory::is_prime(p)) continue;
    ++primes;
    HPReal v = quadfield::dirichlet_class_value(p, P);
    HPReal nearest(v.round_to_long(), P);
    c.expect(abs(v - nearest) < guard && nearest >= HPReal(1, P), "p=" + std::to_string(p));
  }
  return std::to_string(primes) + " primes";
}

std::string crit8(Check& c) {
  std::vector<std::int64_t> Qs(1998);
  std::iota(Qs.begin(), Qs.end(), 3);
  auto t = Clock::now();
  auto fast = rh::rh_table(Qs, rh::Mode::Fast, P, 1);
  double secs = seconds_since(t);
  for (const auto& r : fast) c.expect(r.residual.to_double() < 1e-6, "fast Q=" + std::to_string(r.Q));
  c.expect(secs < 60, "fast runtime");
  std::vector<std::int64_t> small(198);
  std::iota(small.begin(), small.end(), 3);
  auto hp = rh::rh_table(small, rh::Mode::HighPrec, P, 1);
  for (const auto& r : hp) c.expect(r.residual < lim50(), "highprec Q=" + std::to_string(r.Q));
  auto fit = rh::growth_fit(fast);
  std::ostringstream s;
  s << "fast " << std::fixed << std::setprecision(2) << secs << " s; fit alpha " << std::setprecision(3)
    << fit.alpha << " (report only" << (std::isfinite(fit.alpha) ? ")" : ", not finite)");
  c.expect(std::isfinite(fit.alpha), "fit not finite");
  return s.str();
}

std::string crit9(Check& c) {
  std::mt19937_64 rng(0x5eed2024);
  // trig
  std::uniform_int_distribution<std::int64_t> den(1, 10000), num(-40000, 40000);
  HPReal one(1, P);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    HPReal s = sin_pi(r, P), co = cos_pi(r, P);
    c.expect(abs(s * s + co * co - one) <= tau(4, P), "pythagoras " + r.str());
    c.expect(abs(sin_pi(Rational(1) - r, P) - s) <= tau(4, P) && abs(sin_pi(-r, P) + s) <= tau(4, P),
             "symmetry " + r.str());
    if (!r.is_integer())
      c.expect(abs(cot_pi(r, P) - co / s) <= tau(4, P) * max(one, abs(co / s)), "cot " + r.str());
  }
  // Mobius divisor sum
  for (std::int64_t n = 1; n <= 3000; ++n) {
    int s = 0;
    for (auto d : ntheory::divisors(n)) s += ntheory::mobius(d);
    c.expect(s == (n == 1 ? 1 : 0), "mobius sum " + std::to_string(n));
  }
  // Farey counts
  std::int64_t phi = 0;
  for (std::int64_t Q = 1; Q <= 500; ++Q) {
    phi += ntheory::euler_phi(Q);
    ntheory::FareyStream f(Q);
    std::int64_t n = 0, pa = 0, pq = 1;
    bool ordered = true;
    while (auto x = f.next()) {
      ++n;
      ordered = ordered && pa * x->q < x->a * pq && std::gcd(x->a, x->q) == 1;
      pa = x->a;
      pq = x->q;
    }
    c.expect(n == phi && ordered, "farey " + std::to_string(Q));
  }
  // m-invariance
  for (const char* id : {"I18a", "I18b", "I18c", "I18d", "I18e"})
    for (std::int64_t k = 2; k <= 40; ++k) {
      HPReal first(P);
      bool have = false;
      for (std::int64_t m = 1; m < k; ++m) {
        if (std::gcd(m, k) != 1) continue;
        auto e = catalog::eval_direct(id, catalog::ParamSet{{"k", "m"}, {k, m}, {}}, P);
        if (!have) {
          first = e.re;
          have = true;
        }
        c.expect(abs(e.re - first) <= tau(k, P), std::string(id) + " m-invariance k=" + std::to_string(k));
      }
    }
  // I13 step at odd Q
  for (std::int64_t m = 2; m <= 100; ++m)
    c.expect(rh::farey_chi_sine_sum(2 * m, rh::Mode::HighPrec, P) ==
                 rh::farey_chi_sine_sum(2 * m - 1, rh::Mode::HighPrec, P),
             "step Q=" + std::to_string(2 * m));
  // precision doubling
  Precision lo(128), hi = lo.doubled();
  HPReal factor = pow(HPReal(2, hi), lo.bits - 64);
  for (const auto& d : catalog::list_identities()) {
    if (d.takes_pairs) continue;
    auto g = catalog::grid(d.id, 9);
    for (int s = 0; s < 3 && !g.empty(); ++s) {
      const auto& ps = g[rng() % g.size()];
      auto a = catalog::verify(d.id, ps, lo), b = catalog::verify(d.id, ps, hi);
      HPReal ra = max(a.abs_err, a.imag_leak), rb = max(b.abs_err, b.imag_leak);
      bool ok = ra.is_zero() ? rb <= tau(b.terms, hi) : rb * factor <= ra;
      c.expect(ok, "doubling " + d.id + " " + ps.str());
    }
  }
  return std::to_string(c.count) + " checks";
}

}  // namespace

int main() {
  struct Criterion {
    int n;
    const char* name;
    std::function<std::string(Check&)> run;
  };
  std::vector<Criterion> all{
      {1, "full catalog sweep, bound 20", crit1},
      {2, "deeper single-parameter sweeps", crit2},
      {3, "printed golden values", crit3},
      {4, "Dedekind reciprocity and cot form", crit4},
      {5, "three-sum and reciprocity grids", crit5},
      {6, "modified-sum definition oracle", crit6},
      {7, "quadratic fields", crit7},
      {8, "Farey character statistic", crit8},
      {9, "property suites", crit9},
  };
  bool all_ok = true;
  for (auto& cr : all) {
    Check c;
    std::string detail;
    try {
      detail = cr.run(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    all_ok = all_ok && c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << cr.n << ": " << cr.name << " (" << detail << ")\n";
    for (const auto& p : c.problems) std::cout << "      " << p << '\n';
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
