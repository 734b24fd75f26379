#include "trigsum/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include <omp.h>

#include "trigsum/errors.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::ntheory {

Factorization factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize: n must be positive, got " + std::to_string(n));
  Factorization f;
  f.n = n;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int mobius(std::int64_t n) {
  if (n < 1) throw DomainError("mobius: n must be positive, got " + std::to_string(n));
  int m = 1;
  for (const auto& pp : factorize(n).factors) {
    if (pp.e > 1) return 0;
    m = -m;
  }
  return m;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& pp : factorize(n).factors) r = r / pp.p * (pp.p - 1);
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds{1};
  for (const auto& pp : factorize(n).factors) {
    std::size_t base = ds.size();
    std::int64_t pk = 1;
    for (int e = 1; e <= pp.e; ++e) {
      pk *= pp.p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::int8_t> mobius_sieve_serial(std::int64_t n) {
  if (n < 0) throw DomainError("mobius_sieve: negative bound");
  std::vector<std::int8_t> mu(n + 1, 0);
  if (n >= 1) mu[1] = 1;
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(n + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return mu;
}

std::vector<std::int8_t> mobius_sieve_parallel(std::int64_t n) {
  if (n < 0) throw DomainError("mobius_sieve: negative bound");
  std::vector<std::int8_t> mu(n + 1, 0);
  if (n < 1) return mu;
  std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  std::vector<std::int64_t> primes;
  {
    std::vector<bool> comp(root + 1, false);
    for (std::int64_t i = 2; i <= root; ++i) {
      if (comp[i]) continue;
      primes.push_back(i);
      for (std::int64_t j = i * i; j <= root; j += i) comp[j] = true;
    }
  }
  const std::int64_t block = 1 << 15;
  const std::int64_t nblocks = (n + block) / block;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    std::int64_t lo = std::max<std::int64_t>(1, b * block);
    std::int64_t hi = std::min(n + 1, (b + 1) * block);
    if (lo >= hi) continue;
    std::vector<std::int64_t> rest(hi - lo);
    std::vector<std::int8_t> sign(hi - lo, 1);
    for (std::int64_t i = lo; i < hi; ++i) rest[i - lo] = i;
    for (std::int64_t p : primes) {
      std::int64_t start = (lo + p - 1) / p * p;
      for (std::int64_t m = start; m < hi; m += p) {
        std::int64_t& r = rest[m - lo];
        r /= p;
        if (r % p == 0) {
          sign[m - lo] = 0;
        } else {
          sign[m - lo] = static_cast<std::int8_t>(-sign[m - lo]);
        }
      }
    }
    for (std::int64_t i = lo; i < hi; ++i) {
      std::int8_t s = sign[i - lo];
      if (s != 0 && rest[i - lo] > 1) s = static_cast<std::int8_t>(-s);
      mu[i] = s;
    }
  }
  return mu;
}

std::shared_ptr<const std::vector<std::int8_t>> mobius_table(std::int64_t limit) {
  static std::mutex mtx;
  static std::shared_ptr<const std::vector<std::int8_t>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  std::int64_t have = cache ? static_cast<std::int64_t>(cache->size()) - 1 : -1;
  if (limit > have) {
    std::int64_t target = std::max<std::int64_t>({limit, 2 * have, 1024});
    cache = std::make_shared<const std::vector<std::int8_t>>(mobius_sieve_serial(target));
  }
  return cache;
}

std::int64_t mertens_odd(std::int64_t Q) {
  if (Q < 1) throw DomainError("mertens_odd: Q must be positive");
  auto mu = mobius_table(Q);
  std::int64_t s = 0;
  for (std::int64_t q = 1; q <= Q; q += 2) s += (*mu)[q];
  return s;
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n) {
  if (q < 1) throw DomainError("ramanujan_sum: q must be positive");
  std::int64_t g = std::gcd(q, n < 0 ? -n : n);
  if (g == 0) g = q;
  std::int64_t s = 0;
  for (std::int64_t d : divisors(g)) s += mobius(q / d) * d;
  return s;
}

std::int64_t ramanujan_sum_cosine(std::int64_t q, std::int64_t n, Precision p) {
  if (q < 1) throw DomainError("ramanujan_sum: q must be positive");
  HPReal s(p);
  for (std::int64_t k = 1; k <= q; ++k) {
    if (std::gcd(k, q) != 1) continue;
    s += cos_pi(Rational(2 * mod_floor(k * n, q), q), p);
  }
  long r = s.round_to_long();
  if (abs(s - r) > HPReal::parse("1e-30", p))
    throw ConsistencyError("ramanujan_sum_cosine: cosine sum is not an integer");
  return r;
}

int kronecker_symbol(std::int64_t j, std::int64_t d) {
  if (d < 1) throw DomainError("kronecker_symbol: d must be positive");
  int result = 1;
  // factor out powers of two from d, using (j/2)
  while (d % 2 == 0) {
    d /= 2;
    if (j % 2 == 0) return 0;
    std::int64_t r = mod_floor(j, 8);
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (j/d) for odd d
  std::int64_t a = mod_floor(j, d);
  std::int64_t n = d;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int chi4(std::int64_t n) {
  std::int64_t r = mod_floor(n, 4);
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

std::int64_t mod_inverse(std::int64_t h, std::int64_t k) {
  if (k < 2) throw DomainError("mod_inverse: modulus must be at least 2");
  std::int64_t r0 = mod_floor(h, k), r1 = k, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1)
    throw DomainError("mod_inverse: gcd(" + std::to_string(h) + ", " + std::to_string(k) +
                      ") != 1");
  return mod_floor(s0, k);
}

FareyStream::FareyStream(std::int64_t Q) : Q_(Q), d_(Q) {
  if (Q < 1) throw DomainError("farey_sequence: Q must be positive");
}

std::optional<FareyFraction> FareyStream::next() {
  if (done_) return std::nullopt;
  FareyFraction f{c_, d_};
  if (c_ == d_) {
    done_ = true;
  } else {
    std::int64_t k = (Q_ + b_) / d_;
    std::int64_t e = k * c_ - a_;
    std::int64_t g = k * d_ - b_;
    a_ = c_;
    b_ = d_;
    c_ = e;
    d_ = g;
  }
  return f;
}

std::int64_t farey_count(std::int64_t Q) {
  std::int64_t s = 0;
  for (std::int64_t q = 1; q <= Q; ++q) s += euler_phi(q);
  return s;
}

}  // namespace trigsum::ntheory
