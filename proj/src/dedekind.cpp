#include "trigsum/dedekind.hpp"

#include <numeric>
#include <string>

#include "trigsum/errors.hpp"
#include "trigsum/ntheory.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::dedekind {

namespace {

void require_coprime(std::int64_t h, std::int64_t k, const char* who) {
  if (std::gcd(h, k) != 1)
    throw DomainError(std::string(who) + ": gcd(" + std::to_string(h) + ", " +
                      std::to_string(k) + ") != 1");
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x.frac() - Rational(1, 2);
}

Rational dedekind_sum_exact(std::int64_t h, std::int64_t k) {
  if (k < 1) throw DomainError("dedekind_sum: k must be positive");
  require_coprime(h, k, "dedekind_sum");
  Rational s(0);
  for (std::int64_t n = 1; n < k; ++n) s += sawtooth(Rational(n, k)) * sawtooth(Rational(h * n, k));
  return s;
}

HPReal dedekind_sum_cot(std::int64_t h, std::int64_t k, Precision p) {
  if (k < 2) throw DomainError("dedekind_sum_cot: k must be at least 2");
  require_coprime(h, k, "dedekind_sum_cot");
  HPReal s(p);
  for (std::int64_t n = 1; n < k; ++n) s += cot_pi(Rational(n, k), p) * cot_pi(Rational(h * n, k), p);
  s /= 4 * k;
  return s;
}

HPComplex modified_S_definition(const ModifiedSumParams& m, Precision p) {
  if (m.h < 1 || m.k < 2) throw DomainError("modified_S_definition: need h >= 1, k >= 2");
  require_coprime(m.h, m.k, "modified_S_definition");
  const std::int64_t hk = m.h * m.k;
  const std::int64_t hinv = ntheory::mod_inverse(m.h, m.k);
  HPComplex s(p);
  for (std::int64_t j = 0; j < hk; ++j) {
    Rational w = sawtooth(Rational(j, hk)) * sawtooth(Rational(j * hinv, m.k));
    if (w.is_zero()) continue;
    std::int64_t e = mod_floor(j * (m.alpha * m.k + m.beta * m.h), hk);
    HPComplex z = root_of_unity(e, hk, p);
    HPReal wr(w, p);
    z *= wr;
    s += z;
  }
  return s;
}

namespace {

HPReal modified_sum(const ModifiedSumParams& m, bool tan_first, Precision p) {
  if (m.h < 1 || m.k < 2) throw DomainError("modified sum: need h >= 1, k >= 2");
  require_coprime(m.h, m.k, "modified sum");
  const std::int64_t hk = m.h * m.k;
  HPReal s(p);
  for (std::int64_t j = 1; j < m.k; ++j) {
    Rational first(m.mu * (j * m.h + m.alpha * m.k + m.beta * m.h), hk);
    HPReal a = tan_first ? tan_pi(first, p) : cot_pi(first, p);
    s += a * cot_pi(Rational(j * m.h, m.k), p);
  }
  s /= 4 * m.k;
  return s;
}

}  // namespace

HPReal modified_S_cot(const ModifiedSumParams& m, Precision p) { return modified_sum(m, false, p); }

HPReal modified_T_cot(const ModifiedSumParams& m, Precision p) { return modified_sum(m, true, p); }

HPReal pair_cot_sum(std::int64_t u, std::int64_t v, std::int64_t q, Precision p) {
  HPReal s(p);
  for (std::int64_t n = 1; n < q; ++n) s += cot_pi(Rational(n * u, q), p) * cot_pi(Rational(n * v, q), p);
  return s;
}

}  // namespace trigsum::dedekind
