#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigsum/hpreal.hpp"
#include "trigsum/rational.hpp"

namespace trigsum::catalog {

enum class ValueKind {
  Rational,     // both sides rational, compared exactly
  Real,         // real sums against a real closed form
  ComplexReal,  // a complex expression that must come out real
  Complex,      // complex on both sides; real and imaginary parts compared
};

const char* to_string(ValueKind k);

using PairList = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct ParamSet {
  std::vector<std::string> names;
  std::vector<std::int64_t> values;
  PairList pairs;  // I16 only

  std::int64_t operator[](std::string_view name) const;
  std::string str() const;

  friend bool operator<(const ParamSet& a, const ParamSet& b);
  friend bool operator==(const ParamSet& a, const ParamSet& b) = default;
};

struct RawParams {
  std::map<std::string, std::int64_t> values;
  std::optional<PairList> pairs;
};

// One side of an identity. For real evaluators im is zero.
struct Evaluation {
  HPReal re;
  HPReal im;
  std::optional<Rational> exact;
  std::size_t terms = 1;
};

using Evaluator = std::function<Evaluation(const ParamSet&, Precision)>;
// nullptr when the parameters are acceptable, else the violated constraint.
using Constraint = std::function<const char*(const ParamSet&)>;

using Prefix = std::vector<std::int64_t>;

// One coordinate of the sweep grid. lo/hi may depend on earlier
// coordinates; keep prunes a prefix early.
struct Axis {
  std::string name;
  std::function<std::int64_t(const Prefix&, std::int64_t bound)> lo;
  std::function<std::int64_t(const Prefix&, std::int64_t bound)> hi;
  std::function<bool(const Prefix&)> keep;
};

struct IdentityDescriptor {
  std::string id;
  std::string title;
  std::vector<std::string> params;
  bool takes_pairs = false;
  ValueKind kind = ValueKind::Real;
  Constraint constraint;
  Evaluator direct;
  Evaluator closed;
  std::vector<Axis> axes;  // empty: no automatic grid
  std::string note;
};

struct IdentityReport {
  std::string id;
  ParamSet params;
  HPReal lhs;
  HPReal rhs;
  HPReal abs_err;
  HPReal tol;
  HPReal imag_leak;
  bool pass = false;
  std::optional<Rational> exact_residual;
  std::size_t terms = 0;
};

struct VerifyOptions {
  std::optional<HPReal> tol;  // overrides tau(terms)
  int jobs = 0;               // OpenMP threads for sweeps, 0 = default
};

const std::vector<IdentityDescriptor>& list_identities();
// DomainError for an unknown id.
const IdentityDescriptor& find_identity(std::string_view id);

ParamSet validate_params(std::string_view id, const RawParams& raw);

Evaluation eval_direct(std::string_view id, const ParamSet& params, Precision p);
Evaluation eval_closed(std::string_view id, const ParamSet& params, Precision p);

IdentityReport verify(std::string_view id, const ParamSet& params, Precision p,
                      const VerifyOptions& opt = {});

// Every valid parameter set with all parameters <= bound, lexicographic.
std::vector<ParamSet> grid(std::string_view id, std::int64_t bound);

struct SweepResult {
  std::vector<IdentityReport> reports;
  std::string note;
};

// Parallel over parameter sets; output order is independent of threads.
SweepResult sweep(std::string_view id, std::int64_t bound, Precision p,
                  const VerifyOptions& opt = {});
// Plain loop, kept as the reference for the parallel version.
SweepResult sweep_serial(std::string_view id, std::int64_t bound, Precision p,
                         const VerifyOptions& opt = {});
// Verifies an explicit list of parameter sets (parallel, order preserved).
std::vector<IdentityReport> verify_all(std::string_view id, const std::vector<ParamSet>& sets,
                                       Precision p, const VerifyOptions& opt = {});

// Pair families for the sine-quotient theorem with k = 1 (mod 4): every
// list of (k-1)/4 pairs a > b >= 1 with a + b < k whose values
// a-b, a+b, k-(a-b), k-(a+b) together cover 1..k-1 exactly once.
std::vector<PairList> search_pair_families(std::int64_t k);
// The same families streamed in search order (pairs sorted, families not);
// k = 29 already has 17297280 of them.
using PairVisitor = std::function<void(const PairList&)>;
void visit_pair_families(std::int64_t k, const PairVisitor& visit);
// Whether the multiset {a +- b, k - (a +- b)} equals {1, ..., k-1}.
bool pair_family_covers(std::int64_t k, const PairList& pairs);

// Printed numerical corollaries: sums of +- prod sin(u pi/k) / prod sin(v pi/k)
// with their stated values c * sqrt(radicand).
struct SineQuotient {
  int sign = 1;
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;
};

struct GoldenValue {
  std::string name;
  std::int64_t k = 1;
  std::vector<SineQuotient> terms;
  Rational coefficient;
  std::int64_t radicand = 1;
};

const std::vector<GoldenValue>& golden_values();
HPReal golden_lhs(const GoldenValue& g, Precision p);
HPReal golden_rhs(const GoldenValue& g, Precision p);

}  // namespace trigsum::catalog

namespace trigsum::catalog {

// Closed forms with a different kernel or constant for I35b, I36 and I37
// (see the descriptor titles). They do not hold; kept so tests can pin the
// exact size of their defect. DomainError for any other id.
Evaluation variant_closed(std::string_view id, const ParamSet& params, Precision p);

}  // namespace trigsum::catalog
