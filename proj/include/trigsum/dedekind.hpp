#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trigsum/hpreal.hpp"
#include "trigsum/rational.hpp"

namespace trigsum::dedekind {

// ((x)) = x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

// s(h, k) = sum_{n=1}^{k-1} ((n/k)) ((hn/k)), exactly.
Rational dedekind_sum_exact(std::int64_t h, std::int64_t k);
// (1/4k) sum_{n=1}^{k-1} cot(pi n/k) cot(pi h n/k).
HPReal dedekind_sum_cot(std::int64_t h, std::int64_t k, Precision p);

struct ModifiedSumParams {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  std::int64_t h = 2;
  std::int64_t k = 3;
  std::int64_t mu = 1;
};

// sum over j mod hk of e^(2 pi i (j alpha/h + j beta/k)) ((j/hk)) ((j h'/k)).
HPComplex modified_S_definition(const ModifiedSumParams& m, Precision p);
// (1/4k) sum_{j=1}^{k-1} cot(mu (j/k + alpha/h + beta/k) pi) cot(j h pi/k).
HPReal modified_S_cot(const ModifiedSumParams& m, Precision p);
// Same with tan in the first factor.
HPReal modified_T_cot(const ModifiedSumParams& m, Precision p);

// e^(2 pi i (slope*j + offset)/order) for term index j.
struct Phase {
  std::int64_t slope = 0;
  std::int64_t offset = 0;
  std::int64_t order = 1;

  std::int64_t exponent(std::int64_t j) const { return slope * j + offset; }
};

// 1/(zeta + sign)^power with sign in {-1, +1}.
struct Factor {
  Phase phase;
  int sign = -1;
  int power = 1;
};

// sum_{j=lo}^{hi} numerator(j) * prod_f 1/(zeta_f(j) + sign_f)^power_f.
struct TermFamily {
  std::int64_t lo = 1;
  std::int64_t hi = 0;
  std::vector<Factor> factors;
  std::optional<Phase> numerator;

  std::size_t size() const { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
};

// Every denominator is tested exactly before evaluation; SingularTerm
// carries the offending term index.
HPComplex complex_recip_sum(const TermFamily& fam, Precision p);

// 1/(zeta + sign) for the single root e^(2 pi i e/order).
HPComplex recip_root(std::int64_t e, std::int64_t order, int sign, Precision p);

// sum_{n=1}^{q-1} 1/((xi_n^u - 1)(xi_n^v - 1)), xi_n = e^(2 pi i n/q).
HPComplex pair_recip_sum(std::int64_t u, std::int64_t v, std::int64_t q, Precision p);
// sum_{n=1}^{q-1} cot(pi n u/q) cot(pi n v/q).
HPReal pair_cot_sum(std::int64_t u, std::int64_t v, std::int64_t q, Precision p);

}  // namespace trigsum::dedekind
