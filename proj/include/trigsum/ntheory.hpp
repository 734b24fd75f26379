#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "trigsum/hpreal.hpp"

namespace trigsum::ntheory {

struct PrimePower {
  std::int64_t p;
  int e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing
};

// Trial division; intended for n < 2^40.
Factorization factorize(std::int64_t n);
bool is_prime(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

// mu(0..n), mu(0) stored as 0.
std::vector<std::int8_t> mobius_sieve_serial(std::int64_t n);
// Segmented sieve, blocks processed in parallel; identical output.
std::vector<std::int8_t> mobius_sieve_parallel(std::int64_t n);

// Process-wide table of mu(0..limit); grows monotonically, thread safe.
std::shared_ptr<const std::vector<std::int8_t>> mobius_table(std::int64_t limit);

// Sum of mu(q) over odd q <= Q.
std::int64_t mertens_odd(std::int64_t Q);

// c_q(n) through sum_{d | (q,n)} mu(q/d) d.
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n);
// c_q(n) as the cosine sum over reduced residues, rounded; throws
// ConsistencyError if the sum is not within 1e-30 of an integer.
std::int64_t ramanujan_sum_cosine(std::int64_t q, std::int64_t n, Precision p = Precision());

int kronecker_symbol(std::int64_t j, std::int64_t d);
int chi4(std::int64_t n);
std::int64_t mod_inverse(std::int64_t h, std::int64_t k);

struct FareyFraction {
  std::int64_t a;
  std::int64_t q;
  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

// Reduced fractions a/q with 1 <= a <= q <= Q in increasing order, produced
// one at a time by the neighbour recurrence.
class FareyStream {
 public:
  explicit FareyStream(std::int64_t Q);
  std::optional<FareyFraction> next();

 private:
  std::int64_t Q_;
  std::int64_t a_ = 0, b_ = 1, c_ = 1, d_;
  bool done_ = false;
};

std::int64_t farey_count(std::int64_t Q);

// Fundamental unit (x + y sqrt p)/2 of Q(sqrt p), p prime = 1 mod 4.
struct PellUnit {
  mpz_class x;
  mpz_class y;
  bool half = false;  // x and y both odd
  int norm = 1;       // (x^2 - p y^2)/4
};

PellUnit pell_fundamental_unit(std::int64_t p);
// Smallest unit with y <= y_max found by trying every y; none if absent.
std::optional<PellUnit> pell_search(std::int64_t p, std::int64_t y_max);

}  // namespace trigsum::ntheory
