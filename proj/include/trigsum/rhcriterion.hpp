#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "trigsum/hpreal.hpp"

namespace trigsum::rh {

enum class Mode { Fast, HighPrec };

// One line of the table: W(Q) = sum over odd q in [3, Q] and odd a < q
// coprime to q of chi4(aq) sin(pi a/(2q)).
struct RhRow {
  std::int64_t Q = 0;
  HPReal W;
  std::int64_t M_odd = 0;
  HPReal residual;     // |2W + 1 - M_odd|
  HPReal bound_ratio;  // |W| / sqrt(Q)
};

// Contribution of the single denominator q (zero for even q).
double denominator_term_fast(std::int64_t q);
HPReal denominator_term(std::int64_t q, Precision p);

// W(Q) with one running accumulator, no blocking; kept as the reference.
double farey_chi_sine_sum_reference(std::int64_t Q);

// Per-denominator contributions for q = 0..Qmax, computed in parallel.
// jobs <= 0 uses the OpenMP default.
std::vector<double> denominator_terms_fast(std::int64_t Qmax, int jobs = 0);
std::vector<HPReal> denominator_terms(std::int64_t Qmax, Precision p, int jobs = 0);

HPReal farey_chi_sine_sum(std::int64_t Q, Mode mode, Precision p = Precision(), int jobs = 0);

// Rows for an ascending list of Q >= 3, from one pass over denominators.
std::vector<RhRow> rh_table(const std::vector<std::int64_t>& Qs, Mode mode,
                            Precision p = Precision(), int jobs = 0);

struct GrowthFit {
  double alpha = 0;
  double C = 0;
};

// Least squares log|W| = log C + alpha log Q over rows with W != 0.
GrowthFit growth_fit(const std::vector<RhRow>& rows);

// Q, W, M_odd, residual, bound_ratio with a header line. Fast mode prints
// 17 significant digits, high precision mode all digits of p.
void write_csv(std::ostream& os, const std::vector<RhRow>& rows, Mode mode);

}  // namespace trigsum::rh
