// Evaluations of alternating sine/cosecant sums, the Ramanujan-sum
// analogues, sine quotients and the quadratic field identity.

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "catalog_internal.hpp"
#include "trigsum/ntheory.hpp"
#include "trigsum/quadfield.hpp"
#include "trigsum/rhcriterion.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::catalog::detail {

namespace {

using ntheory::factorize;

const char* need_odd_k(const ParamSet& ps) {
  std::int64_t k = ps["k"];
  if (k < 3) return "k must be at least 3";
  if (k % 2 == 0) return "k must be odd";
  return nullptr;
}

bool last_odd(const Prefix& v) { return v.back() % 2 != 0; }
bool last_even(const Prefix& v) { return v.back() % 2 == 0; }

// j = 2 (mod 4) with gcd(j/2, x/2) = 1, x even being the previous value
bool j_2mod4_coprime(const Prefix& v) {
  std::int64_t x = v[v.size() - 2], j = v.back();
  return j % 4 == 2 && coprime(j / 2, x / 2);
}

// sin((j-1) l pi/d) sin((j+1) l pi/d) / (sin^2(l pi/d) sin^2(j l pi/d))
HPReal u_term(std::int64_t j, std::int64_t l, std::int64_t d, Precision p) {
  HPReal num = sin_pi(Rational((j - 1) * l, d), p) * sin_pi(Rational((j + 1) * l, d), p);
  HPReal den = square(sin_pi(Rational(l, d), p)) * square(sin_pi(Rational(j * l, d), p));
  return num / den;
}

// prod over p | k of (1 - 1/p^2)
Rational euler_square(std::int64_t k) {
  Rational r(1);
  for (const auto& pp : factorize(k).factors) r *= Rational(1) - Rational(1, pp.p * pp.p);
  return r;
}

int alt(std::int64_t j) { return j % 2 != 0 ? 1 : -1; }  // (-1)^(j-1)

// sum_{l odd in [1, top), gcd(l, k) = 1} of f(l)
template <class F>
Evaluation coprime_odd_sum(std::int64_t k, std::int64_t top, Precision p, F f) {
  HPReal s(p);
  std::size_t n = 0;
  for (std::int64_t l = 1; l < top; l += 2) {
    if (!coprime(l, k)) continue;
    s += f(l);
    ++n;
  }
  return real(std::move(s), n);
}

// sin(2x pi/k)/sin(x pi/k), memoized: scan-pairs and the pair-family sweeps
// reuse the same few hundred quotients millions of times.
HPReal sine_quotient(std::int64_t x, std::int64_t k, Precision p) {
  using Key = std::tuple<std::int64_t, std::int64_t, long>;
  static std::shared_mutex mu;
  static std::map<Key, HPReal> memo;
  Key key{x, k, p.bits};
  {
    std::shared_lock lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  HPReal v = sin_pi(Rational(2 * x, k), p) / sin_pi(Rational(x, k), p);
  std::unique_lock lock(mu);
  memo.emplace(key, v);
  return v;
}

void add_section_two(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I00", "sum_{k=1}^{n-1} csc^2(k pi/n) = (n^2-1)/3", {"n"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* { return ps["n"] < 2 ? "n must be at least 2" : nullptr; },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"];
        HPReal s(p);
        for (std::int64_t k = 1; k < n; ++k) s += square(csc_pi(Rational(k, n), p));
        return real(std::move(s), n - 1);
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"];
        return exact(Rational(n * n - 1, 3), p);
      },
      {axis("n", 2)}, ""});

  auto alternating = [](bool csc, bool full) {
    return [csc, full](const ParamSet& ps, Precision p) {
      std::int64_t k = ps["k"];
      std::int64_t top = full ? k : (k - 1) / 2;
      HPReal s(p);
      for (std::int64_t j = 1; j <= top; ++j) {
        Rational x(2 * j - 1, 2 * k);
        HPReal t = csc ? csc_pi(x, p) : sin_pi(x, p);
        if (alt(j) > 0)
          s += t;
        else
          s -= t;
      }
      return real(std::move(s), top);
    };
  };
  auto sgn_k1 = [](std::int64_t k) -> std::int64_t { return ((k + 1) / 2) % 2 == 0 ? 1 : -1; };

  out.push_back(IdentityDescriptor{
      "I01", "sum_{j=1}^{(k-1)/2} (-1)^(j-1) sin((2j-1) pi/(2k)) = (-1)^((k+1)/2)/2", {"k"}, false,
      ValueKind::Real, need_odd_k, alternating(false, false),
      [sgn_k1](const ParamSet& ps, Precision p) { return exact(Rational(sgn_k1(ps["k"]), 2), p); },
      {axis("k", 3, last_odd)}, ""});
  out.push_back(IdentityDescriptor{
      "I02", "sum_{j=1}^{(k-1)/2} (-1)^(j-1) csc((2j-1) pi/(2k)) = (k + (-1)^((k+1)/2))/2", {"k"},
      false, ValueKind::Real, need_odd_k, alternating(true, false),
      [sgn_k1](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        return exact(Rational(k + sgn_k1(k), 2), p);
      },
      {axis("k", 3, last_odd)}, ""});
  out.push_back(IdentityDescriptor{
      "A01", "sum_{j=1}^{k} (-1)^(j-1) sin((2j-1) pi/(2k)) = 0", {"k"}, false, ValueKind::Real,
      need_odd_k, alternating(false, true),
      [](const ParamSet&, Precision p) { return exact(Rational(0), p); },
      {axis("k", 3, last_odd)}, ""});
  out.push_back(IdentityDescriptor{
      "A02", "sum_{j=1}^{k} (-1)^(j-1) csc((2j-1) pi/(2k)) = k", {"k"}, false, ValueKind::Real,
      need_odd_k, alternating(true, true),
      [](const ParamSet& ps, Precision p) { return exact(Rational(ps["k"]), p); },
      {axis("k", 3, last_odd)}, ""});

  auto even_n_j2 = [](const ParamSet& ps) -> const char* {
    std::int64_t n = ps["n"], j = ps["j"];
    if (n < 2 || n % 2 != 0) return "n must be even";
    if (j < 1 || j % 4 != 2) return "j must be 2 (mod 4)";
    if (!coprime(j / 2, n / 2)) return "gcd(j/2, n/2) must be 1";
    return nullptr;
  };
  out.push_back(IdentityDescriptor{
      "I03", "sum_{k=1}^{n/2-1} U_j(k pi/n) = (n^2-4)/12", {"n", "j"}, false, ValueKind::Real,
      even_n_j2,
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"], j = ps["j"];
        HPReal s(p);
        for (std::int64_t k = 1; k < n / 2; ++k) s += u_term(j, k, n, p);
        return real(std::move(s), std::max<std::int64_t>(n / 2 - 1, 0));
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"];
        return exact(Rational(n * n - 4, 12), p);
      },
      {axis("n", 2, last_even), axis("j", 2, j_2mod4_coprime)}, ""});
  out.push_back(IdentityDescriptor{
      "I04", "sum_{k=0}^{n/2-1} U_j((2k+1) pi/(2n)) = n^2/4", {"n", "j"}, false, ValueKind::Real,
      even_n_j2,
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"], j = ps["j"];
        HPReal s(p);
        for (std::int64_t k = 0; k < n / 2; ++k) s += u_term(j, 2 * k + 1, 2 * n, p);
        return real(std::move(s), n / 2);
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"];
        return exact(Rational(n * n, 4), p);
      },
      {axis("n", 2, last_even), axis("j", 2, j_2mod4_coprime)}, ""});
  out.push_back(IdentityDescriptor{
      "I05", "sum_{k=0}^{(n-3)/2} U_j((2k+1) pi/(2n)) = (n^2-1)/3", {"n", "j"}, false,
      ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t n = ps["n"], j = ps["j"];
        if (n < 1 || n % 2 == 0) return "n must be odd";
        if (j < 2 || j % 2 != 0) return "j must be even";
        if (!coprime(j, n)) return "gcd(j, n) must be 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"], j = ps["j"];
        HPReal s(p);
        for (std::int64_t k = 0; 2 * k + 3 <= n; ++k) s += u_term(j, 2 * k + 1, 2 * n, p);
        return real(std::move(s), (n - 1) / 2);
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"];
        return exact(Rational(n * n - 1, 3), p);
      },
      {axis("n", 1, last_odd),
       axis("j", 2, [](const Prefix& v) { return v[1] % 2 == 0 && coprime(v[0], v[1]); })},
      ""});
  out.push_back(IdentityDescriptor{
      "I06", "sum_{k=0}^{(n-3)/2} U_j((2k+1) pi/n) = 0", {"n", "j"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t n = ps["n"], j = ps["j"];
        if (n < 1 || n % 2 == 0) return "n must be odd";
        if (j < 1) return "j must be positive";
        if (!coprime(j, n)) return "gcd(j, n) must be 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"], j = ps["j"];
        HPReal s(p);
        for (std::int64_t k = 0; 2 * k + 3 <= n; ++k) s += u_term(j, 2 * k + 1, n, p);
        return real(std::move(s), (n - 1) / 2);
      },
      [](const ParamSet&, Precision p) { return exact(Rational(0), p); },
      {axis("n", 1, last_odd), axis("j", 1, [](const Prefix& v) { return coprime(v[0], v[1]); })},
      ""});
}

void add_section_three(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I07", "sum_{l odd, (l,k)=1} (-1)^((l-1)/2) sin(pi l/(2k)) = (-1)^((k-1)/2) mu(k)/2", {"k"},
      false, ValueKind::Real, need_odd_k,
      [](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        return coprime_odd_sum(k, k, p, [&](std::int64_t l) {
          HPReal t = sin_pi(Rational(l, 2 * k), p);
          return ntheory::chi4(l) > 0 ? t : -t;
        });
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        return exact(Rational(ntheory::chi4(k) * ntheory::mobius(k), 2), p);
      },
      {axis("k", 3, last_odd)}, ""});
  out.push_back(IdentityDescriptor{
      "I08",
      "sum_{l odd, (l,k)=1} (-1)^((l-1)/2) csc(pi l/(2k)) = (k/2) prod_{p=1(4)}(1-1/p) "
      "prod_{p=3(4)}(1+1/p)",
      {"k"}, false, ValueKind::Real, need_odd_k,
      [](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        return coprime_odd_sum(k, k, p, [&](std::int64_t l) {
          HPReal t = csc_pi(Rational(l, 2 * k), p);
          return ntheory::chi4(l) > 0 ? t : -t;
        });
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        Rational r(k, 2);
        for (const auto& pp : factorize(k).factors)
          r *= pp.p % 4 == 1 ? Rational(pp.p - 1, pp.p) : Rational(pp.p + 1, pp.p);
        return exact(r, p);
      },
      {axis("k", 3, last_odd)}, ""});

  auto u_sum = [](std::int64_t den_mul, bool half_range) {
    return [den_mul, half_range](const ParamSet& ps, Precision p) {
      std::int64_t k = ps["k"], j = ps["j"];
      if (half_range) {
        HPReal s(p);
        std::size_t n = 0;
        for (std::int64_t l = 1; 2 * l < k; ++l) {
          if (!coprime(l, k)) continue;
          s += u_term(j, l, k, p);
          ++n;
        }
        return real(std::move(s), n);
      }
      return coprime_odd_sum(k, k, p, [&](std::int64_t l) { return u_term(j, l, den_mul * k, p); });
    };
  };
  auto k2_over = [](std::int64_t d) {
    return [d](const ParamSet& ps, Precision p) {
      std::int64_t k = ps["k"];
      return exact(Rational(k * k, d) * euler_square(k), p);
    };
  };

  out.push_back(IdentityDescriptor{
      "I09", "U1: sum_{l odd, (l,k)=1} U_j(l pi/(2k)) = (k^2/3) prod (1-p^-2)", {"k", "j"}, false,
      ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        if (const char* w = need_odd_k(ps)) return w;
        std::int64_t j = ps["j"];
        if (j < 2 || j % 2 != 0) return "j must be even";
        if (!coprime(j, ps["k"])) return "gcd(j, k) must be 1";
        return nullptr;
      },
      u_sum(2, false), k2_over(3),
      {axis("k", 3, last_odd),
       axis("j", 2, [](const Prefix& v) { return v[1] % 2 == 0 && coprime(v[0], v[1]); })},
      ""});
  auto even_k_j2 = [](std::int64_t modulus) {
    return [modulus](const ParamSet& ps) -> const char* {
      std::int64_t k = ps["k"], j = ps["j"];
      if (modulus == 2 && (k < 2 || k % 2 != 0)) return "k must be even";
      if (modulus == 4 && (k < 4 || k % 4 != 0)) return "k must be 0 (mod 4)";
      if (j < 1 || j % 4 != 2) return "j must be 2 (mod 4)";
      if (!coprime(j / 2, k / 2)) return "gcd(j/2, k/2) must be 1";
      return nullptr;
    };
  };
  out.push_back(IdentityDescriptor{
      "I10", "U2: sum_{l odd, (l,k)=1} U_j(l pi/(2k)) = (k^2/3) prod (1-p^-2), k even", {"k", "j"},
      false, ValueKind::Real, even_k_j2(2), u_sum(2, false), k2_over(3),
      {axis("k", 2, last_even), axis("j", 2, j_2mod4_coprime)}, ""});
  out.push_back(IdentityDescriptor{
      "I11", "U3: sum_{l<k/2, (l,k)=1} U_j(l pi/k) = (k^2/12) prod (1-p^-2), 4 | k", {"k", "j"},
      false, ValueKind::Real, even_k_j2(4), u_sum(1, true), k2_over(12),
      {axis("k", 4, [](const Prefix& v) { return v[0] % 4 == 0; }), axis("j", 2, j_2mod4_coprime)},
      ""});
  out.push_back(IdentityDescriptor{
      "I12", "U4: sum_{l odd, (l,k)=1} U_j(l pi/k) = 0, k odd", {"k", "j"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        if (const char* w = need_odd_k(ps)) return w;
        std::int64_t j = ps["j"];
        if (j < 1) return "j must be positive";
        if (!coprime(j, ps["k"])) return "gcd(j, k) must be 1";
        return nullptr;
      },
      u_sum(1, false), [](const ParamSet&, Precision p) { return exact(Rational(0), p); },
      {axis("k", 3, last_odd), axis("j", 1, [](const Prefix& v) { return coprime(v[0], v[1]); })},
      ""});
}

void add_section_four(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I13", "sum_{q odd, 3<=q<=Q} chi(q) S(q) = (M_odd(Q) - 1)/2", {"Q"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* { return ps["Q"] < 3 ? "Q must be at least 3" : nullptr; },
      [](const ParamSet& ps, Precision p) {
        std::int64_t Q = ps["Q"];
        HPReal s(p);
        std::size_t n = 0;
        for (std::int64_t q = 3; q <= Q; q += 2) {
          s += rh::denominator_term(q, p);
          n += static_cast<std::size_t>(ntheory::euler_phi(q) / 2);
        }
        return real(std::move(s), n);
      },
      [](const ParamSet& ps, Precision p) {
        return exact(Rational(ntheory::mertens_odd(ps["Q"]) - 1, 2), p);
      },
      {axis("Q", 3)}, ""});
}

void add_section_five(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I14", "sum_{j=1}^{(k-1)/2} (-1)^(j-1) sin(2j pi/k)/sin(j pi/k) = 1", {"k"}, false,
      ValueKind::Real, need_odd_k,
      [](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        HPReal s(p);
        for (std::int64_t j = 1; 2 * j < k; ++j) {
          HPReal t = sine_quotient(j, k, p);
          if (alt(j) > 0)
            s += t;
          else
            s -= t;
        }
        return real(std::move(s), (k - 1) / 2);
      },
      [](const ParamSet&, Precision p) { return exact(Rational(1), p); },
      {axis("k", 3, last_odd)}, ""});

  out.push_back(IdentityDescriptor{
      "I15",
      "Q(a) - sum_{j=1}^{(n-1)/2} (-1)^(j-1) (Q(mj-a) + Q(mj+a)) = 0, k = nm, Q(x) = "
      "sin(2x pi/k)/sin(x pi/k)",
      {"n", "m", "a"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t n = ps["n"], m = ps["m"], a = ps["a"];
        if (n < 3 || n % 2 == 0) return "n must be odd and at least 3";
        if (m < 3 || m % 2 == 0) return "m must be odd and at least 3";
        if (a < 1 || 2 * a > n * m - 1) return "a must lie in [1, (nm-1)/2]";
        if (a % m == 0) return "m must not divide a";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t n = ps["n"], m = ps["m"], a = ps["a"], k = n * m;
        HPReal s = sine_quotient(a, k, p);
        for (std::int64_t j = 1; 2 * j < n; ++j) {
          HPReal t = sine_quotient(m * j - a, k, p) + sine_quotient(m * j + a, k, p);
          if (alt(j) > 0)
            s -= t;
          else
            s += t;
        }
        return real(std::move(s), static_cast<std::size_t>(n));
      },
      [](const ParamSet&, Precision p) { return exact(Rational(0), p); },
      {axis("n", 3, last_odd), axis("m", 3, last_odd),
       axis("a", fixed(1), [](const Prefix& v, std::int64_t) { return (v[0] * v[1] - 1) / 2; },
            [](const Prefix& v) { return v[2] % v[1] != 0; })},
      ""});

  out.push_back(IdentityDescriptor{
      "I16",
      "sum_j (-1)^(a_j+b_j) sin(2a_j pi/k) sin(2b_j pi/k)/(sin(a_j pi/k) sin(b_j pi/k)) = -1",
      {"k"}, true, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t k = ps["k"];
        if (k < 5 || k % 4 != 1) return "k must be 1 (mod 4) and at least 5";
        if (ps.pairs.size() != static_cast<std::size_t>((k - 1) / 4))
          return "the pair list must have (k-1)/4 entries";
        for (const auto& [a, b] : ps.pairs)
          if (a % k == 0 || b % k == 0) return "no a_j or b_j may be divisible by k";
        if (!pair_family_covers(k, ps.pairs))
          return "the values a_j+-b_j, k-(a_j+-b_j) must be exactly 1..k-1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t k = ps["k"];
        HPReal s(p);
        for (const auto& [a, b] : ps.pairs) {
          HPReal t = sine_quotient(a, k, p) * sine_quotient(b, k, p);
          if ((a + b) % 2 == 0)
            s += t;
          else
            s -= t;
        }
        return real(std::move(s), ps.pairs.size());
      },
      [](const ParamSet&, Precision p) { return exact(Rational(-1), p); },
      {}, "needs an explicit pair family; none are generated from k alone (see scan-pairs)"});
}

void add_section_six(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I17", "R + sign/R = eps^h + sign eps^-h, R = prod_{non-residues} sin / prod_{residues} sin",
      {"p", "sign"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t p = ps["p"], sign = ps["sign"];
        if (!ntheory::is_prime(p) || p % 4 != 1) return "p must be a prime = 1 (mod 4)";
        if (sign != 1 && sign != -1) return "sign must be plus or minus";
        return nullptr;
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], sign = ps["sign"];
        HPReal r = quadfield::residue_sine_ratio(p, prec);
        HPReal inv = HPReal(1, prec) / r;
        return real(sign > 0 ? r + inv : r - inv, static_cast<std::size_t>(p - 1) / 2);
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], sign = ps["sign"];
        auto unit = ntheory::pell_fundamental_unit(p);
        std::int64_t h = quadfield::dirichlet_class_number(p, prec);
        HPReal e = pow(quadfield::unit_value(unit, p, prec), h);
        HPReal inv = HPReal(1, prec) / e;
        return real(sign > 0 ? e + inv : e - inv, static_cast<std::size_t>(p - 1));
      },
      {axis("p", 5, [](const Prefix& v) { return ntheory::is_prime(v[0]) && v[0] % 4 == 1; }),
       axis("sign", fixed(-1), fixed(1), [](const Prefix& v) { return v[1] != 0; })},
      ""});
}

}  // namespace

void add_classic(std::vector<IdentityDescriptor>& out) {
  add_section_two(out);
  add_section_three(out);
  add_section_four(out);
  add_section_five(out);
  add_section_six(out);
}

}  // namespace trigsum::catalog::detail
