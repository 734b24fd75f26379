#include <string>

#include "trigsum/errors.hpp"
#include "trigsum/ntheory.hpp"

namespace trigsum::ntheory {

namespace {

void check_prime_1mod4(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw DomainError("pell_fundamental_unit: p must be a prime = 1 (mod 4), got " +
                      std::to_string(p));
}

}  // namespace

std::optional<PellUnit> pell_search(std::int64_t p, std::int64_t y_max) {
  mpz_class P(static_cast<long>(p));
  for (std::int64_t yy = 1; yy <= y_max; ++yy) {
    mpz_class y(static_cast<long>(yy));
    mpz_class py2 = P * y * y;
    for (int norm : {-1, 1}) {
      mpz_class x2 = py2 + 4 * norm;
      if (x2 <= 0 || !mpz_perfect_square_p(x2.get_mpz_t())) continue;
      mpz_class x;
      mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
      return PellUnit{x, y, mpz_odd_p(x.get_mpz_t()) != 0, norm};
    }
  }
  return std::nullopt;
}

// For p > 16 every solution of |x^2 - p y^2| in {1, 4} with gcd(x, y) = 1
// is a convergent of sqrt(p), since 4 < sqrt(p). Walk the convergents and
// keep the candidate with the smallest y until denominators pass it.
PellUnit pell_fundamental_unit(std::int64_t p) {
  check_prime_1mod4(p);
  if (p < 17) return *pell_search(p, 1000);

  mpz_class P(static_cast<long>(p));
  mpz_class a0;
  mpz_sqrt(a0.get_mpz_t(), P.get_mpz_t());
  mpz_class m = 0, d = 1, a = a0;
  mpz_class h_prev = 1, h = a0, k_prev = 0, k = 1;
  std::optional<PellUnit> best;
  while (!best || k <= best->y) {
    mpz_class n = h * h - P * k * k;
    if (n == 4 || n == -4) {
      PellUnit u{h, k, true, n > 0 ? 1 : -1};
      if (!best || u.y < best->y) best = u;
    } else if (n == 1 || n == -1) {
      PellUnit u{2 * h, 2 * k, false, n > 0 ? 1 : -1};
      if (!best || u.y < best->y) best = u;
    }
    m = d * a - m;
    d = (P - m * m) / d;
    a = (a0 + m) / d;
    mpz_class hn = a * h + h_prev;
    mpz_class kn = a * k + k_prev;
    h_prev = h;
    h = hn;
    k_prev = k;
    k = kn;
  }
  return *best;
}

}  // namespace trigsum::ntheory
