#include <exception>

#include <omp.h>

#include "trigsum/catalog.hpp"

namespace trigsum::catalog {

std::vector<IdentityReport> verify_all(std::string_view id, const std::vector<ParamSet>& sets,
                                       Precision p, const VerifyOptions& opt) {
  const IdentityDescriptor& d = find_identity(id);
  std::vector<IdentityReport> out(sets.size());
  std::exception_ptr failure;
  int nt = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  const long n = static_cast<long>(sets.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = verify(d.id, sets[i], p, opt);
    } catch (...) {
#pragma omp critical(sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SweepResult sweep(std::string_view id, std::int64_t bound, Precision p, const VerifyOptions& opt) {
  const IdentityDescriptor& d = find_identity(id);
  SweepResult r;
  r.note = d.note;
  r.reports = verify_all(id, grid(id, bound), p, opt);
  return r;
}

SweepResult sweep_serial(std::string_view id, std::int64_t bound, Precision p,
                         const VerifyOptions& opt) {
  const IdentityDescriptor& d = find_identity(id);
  SweepResult r;
  r.note = d.note;
  for (const ParamSet& ps : grid(id, bound)) r.reports.push_back(verify(id, ps, p, opt));
  return r;
}

}  // namespace trigsum::catalog
