#include "trigsum/rhcriterion.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include <omp.h>

#include "trigsum/errors.hpp"
#include "trigsum/ntheory.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::rh {

double denominator_term_fast(std::int64_t q) {
  if (q < 3 || q % 2 == 0) return 0.0;
  double s = 0.0;
  for (std::int64_t a = 1; a < q; a += 2) {
    if (std::gcd(a, q) != 1) continue;
    double t = std::sin(M_PI * static_cast<double>(a) / (2.0 * static_cast<double>(q)));
    s += ntheory::chi4(a) > 0 ? t : -t;
  }
  return ntheory::chi4(q) > 0 ? s : -s;
}

HPReal denominator_term(std::int64_t q, Precision p) {
  HPReal s(p);
  if (q < 3 || q % 2 == 0) return s;
  for (std::int64_t a = 1; a < q; a += 2) {
    if (std::gcd(a, q) != 1) continue;
    HPReal t = sin_pi(Rational(a, 2 * q), p);
    if (ntheory::chi4(a) > 0)
      s += t;
    else
      s -= t;
  }
  return ntheory::chi4(q) > 0 ? s : -s;
}

double farey_chi_sine_sum_reference(std::int64_t Q) {
  if (Q < 3) throw DomainError("farey_chi_sine_sum: Q must be at least 3");
  double w = 0.0;
  for (std::int64_t q = 3; q <= Q; q += 2) {
    for (std::int64_t a = 1; a < q; a += 2) {
      if (std::gcd(a, q) != 1) continue;
      w += ntheory::chi4(a * q) * std::sin(M_PI * a / (2.0 * q));
    }
  }
  return w;
}

std::vector<double> denominator_terms_fast(std::int64_t Qmax, int jobs) {
  std::vector<double> t(Qmax + 1, 0.0);
  int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
  for (std::int64_t q = 3; q <= Qmax; ++q) t[q] = denominator_term_fast(q);
  return t;
}

std::vector<HPReal> denominator_terms(std::int64_t Qmax, Precision p, int jobs) {
  std::vector<HPReal> t(Qmax + 1, HPReal(p));
  int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (std::int64_t q = 3; q <= Qmax; ++q) t[q] = denominator_term(q, p);
  return t;
}

HPReal farey_chi_sine_sum(std::int64_t Q, Mode mode, Precision p, int jobs) {
  if (Q < 3) throw DomainError("farey_chi_sine_sum: Q must be at least 3");
  return rh_table({Q}, mode, p, jobs).front().W;
}

std::vector<RhRow> rh_table(const std::vector<std::int64_t>& Qs, Mode mode, Precision p,
                            int jobs) {
  std::vector<RhRow> rows;
  if (Qs.empty()) return rows;
  for (std::size_t i = 0; i < Qs.size(); ++i) {
    if (Qs[i] < 3) throw DomainError("rh_table: every Q must be at least 3");
    if (i > 0 && Qs[i] <= Qs[i - 1]) throw DomainError("rh_table: Q list must be ascending");
  }
  const std::int64_t Qmax = Qs.back();
  auto mu = ntheory::mobius_table(Qmax);
  Precision rp = mode == Mode::Fast ? Precision(64) : p;

  std::vector<double> fast;
  std::vector<HPReal> slow;
  if (mode == Mode::Fast)
    fast = denominator_terms_fast(Qmax, jobs);
  else
    slow = denominator_terms(Qmax, p, jobs);

  double wf = 0.0;
  HPReal wh(rp);
  std::int64_t m_odd = 1;  // mu(1)
  std::size_t next = 0;
  for (std::int64_t q = 2; q <= Qmax && next < Qs.size(); ++q) {
    if (q % 2 == 1) {
      m_odd += (*mu)[q];
      if (mode == Mode::Fast)
        wf += fast[q];
      else
        wh += slow[q];
    }
    if (q != Qs[next]) continue;
    RhRow row;
    row.Q = q;
    row.W = mode == Mode::Fast ? HPReal::from_double(wf, rp) : wh;
    row.M_odd = m_odd;
    row.residual = abs(row.W * 2 + 1 - m_odd);
    row.bound_ratio = abs(row.W) / sqrt(HPReal(q, rp));
    rows.push_back(std::move(row));
    ++next;
  }
  return rows;
}

GrowthFit growth_fit(const std::vector<RhRow>& rows) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    double w = std::fabs(r.W.to_double());
    if (w == 0.0) continue;
    xs.push_back(std::log(static_cast<double>(r.Q)));
    ys.push_back(std::log(w));
  }
  if (xs.size() < 3) throw DomainError("growth_fit: need at least 3 rows with W != 0");
  double n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DomainError("growth_fit: all rows share one Q");
  GrowthFit f;
  f.alpha = sxy / sxx;
  f.C = std::exp(my - f.alpha * mx);
  return f;
}

void write_csv(std::ostream& os, const std::vector<RhRow>& rows, Mode mode) {
  int digits = mode == Mode::Fast ? 17 : 0;
  os << "Q,W,M_odd,residual,bound_ratio\n";
  for (const auto& r : rows) {
    os << r.Q << ',' << r.W.to_decimal(digits) << ',' << r.M_odd << ','
       << r.residual.to_decimal(digits) << ',' << r.bound_ratio.to_decimal(digits) << '\n';
  }
}

}  // namespace trigsum::rh
