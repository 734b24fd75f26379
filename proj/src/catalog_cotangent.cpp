// Root-of-unity reciprocal sums, their cotangent counterparts and the
// classical Dedekind sum.

#include "catalog_internal.hpp"
#include "trigsum/dedekind.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::catalog::detail {

namespace {

using dedekind::Factor;
using dedekind::pair_cot_sum;
using dedekind::pair_recip_sum;
using dedekind::Phase;
using dedekind::TermFamily;

bool pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
  return coprime(a, b) && coprime(b, c) && coprime(a, c);
}

bool keep_coprime2(const Prefix& v) { return coprime(v[0], v[1]); }
bool keep_coprime3(const Prefix& v) { return pairwise_coprime(v[0], v[1], v[2]); }

void add_lemma_shapes(std::vector<IdentityDescriptor>& out) {
  struct Shape {
    const char* id;
    const char* title;
    bool numerator;
    int power;
    Rational (*value)(std::int64_t);
  };
  static const Shape shapes[] = {
      {"I18a", "sum_{n=1}^{k-1} 1/(z_n - 1) = -(k-1)/2", false, 1,
       [](std::int64_t k) { return Rational(-(k - 1), 2); }},
      {"I18b", "sum_{n=1}^{k-1} z_n/(z_n - 1) = (k-1)/2", true, 1,
       [](std::int64_t k) { return Rational(k - 1, 2); }},
      {"I18c", "sum_{n=1}^{k-1} 1/(z_n - 1)^2 = -(k-1)(k-5)/12", false, 2,
       [](std::int64_t k) { return Rational(-(k - 1) * (k - 5), 12); }},
      {"I18d", "sum_{n=1}^{k-1} z_n/(z_n - 1)^2 = -(k-1)(k+1)/12", true, 2,
       [](std::int64_t k) { return Rational(-(k - 1) * (k + 1), 12); }},
      {"I18e", "sum_{n=1}^{k-1} 1/(z_n - 1)^3 = (k-1)(k-3)/8", false, 3,
       [](std::int64_t k) { return Rational((k - 1) * (k - 3), 8); }},
  };
  for (const Shape& s : shapes) {
    out.push_back(IdentityDescriptor{
        s.id, std::string(s.title) + ", z_n = e^(2 pi i n m/k)", {"k", "m"}, false,
        ValueKind::ComplexReal,
        [](const ParamSet& ps) -> const char* {
          std::int64_t k = ps["k"], m = ps["m"];
          if (k < 2) return "k must be at least 2";
          if (m < 1) return "m must be positive";
          if (!coprime(m, k)) return "gcd(m, k) must be 1";
          return nullptr;
        },
        [s](const ParamSet& ps, Precision p) {
          std::int64_t k = ps["k"], m = ps["m"];
          TermFamily fam;
          fam.lo = 1;
          fam.hi = k - 1;
          fam.factors = {Factor{Phase{m, 0, k}, -1, s.power}};
          if (s.numerator) fam.numerator = Phase{m, 0, k};
          return cplx(dedekind::complex_recip_sum(fam, p), fam.size());
        },
        [s](const ParamSet& ps, Precision p) { return exact(s.value(ps["k"]), p); },
        {axis("k", 2), axis("m", 1, keep_coprime2)}, ""});
  }
}

void add_three_sums(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I19",
      "q sum_{j<p} 1/((w_j-1)(w_j^q-1)) + p sum_{j<q} 1/((x_j-1)(x_j^p-1)) = "
      "-(p^2+q^2-9pq+3p+3q+1)/12",
      {"p", "q"}, false, ValueKind::ComplexReal,
      [](const ParamSet& ps) -> const char* {
        std::int64_t p = ps["p"], q = ps["q"];
        if (p < 2 || q < 2) return "p and q must be at least 2";
        if (!coprime(p, q)) return "gcd(p, q) must be 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"];
        HPComplex s = pair_recip_sum(1, q, p, prec) * q + pair_recip_sum(1, p, q, prec) * p;
        return cplx(std::move(s), static_cast<std::size_t>(p + q - 2));
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"];
        return exact(Rational(-(p * p + q * q - 9 * p * q + 3 * p + 3 * q + 1), 12), prec);
      },
      {axis("p", 2), axis("q", 2, keep_coprime2)}, ""});

  auto pairwise = [](std::int64_t lo_all, std::int64_t lo_q) {
    return [lo_all, lo_q](const ParamSet& ps) -> const char* {
      std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
      if (p < lo_all || mu < lo_all || q < std::max(lo_all, lo_q))
        return lo_all >= 2 ? "p, q, mu must be at least 2"
                           : (lo_q >= 2 ? "q must be at least 2" : "p, q, mu must be positive");
      if (!pairwise_coprime(p, q, mu)) return "p, q, mu must be pairwise coprime";
      return nullptr;
    };
  };

  out.push_back(IdentityDescriptor{
      "I20",
      "p mu R(p,mu;q) + q mu R(q,mu;p) + pq R(p,q;mu) = pq mu - (p^2+q^2+mu^2)/12 - "
      "(pq+q mu+p mu)/4",
      {"p", "q", "mu"}, false, ValueKind::ComplexReal, pairwise(1, 1),
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        HPComplex s = pair_recip_sum(p, mu, q, prec) * (p * mu);
        s += pair_recip_sum(q, mu, p, prec) * (q * mu);
        s += pair_recip_sum(p, q, mu, prec) * (p * q);
        return cplx(std::move(s), static_cast<std::size_t>(p + q + mu - 3));
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        Rational r = Rational(p * q * mu) - Rational(p * p + q * q + mu * mu, 12) -
                     Rational(p * q + q * mu + p * mu, 4);
        return exact(r, prec);
      },
      {axis("p", 1), axis("q", 1, keep_coprime2), axis("mu", 1, keep_coprime3)}, ""});

  out.push_back(IdentityDescriptor{
      "I21", "sum_{n<q} cot(pi np/q) cot(pi n mu/q) = q - 1 - 4 sum_{n<q} 1/((x_n^p-1)(x_n^mu-1))",
      {"p", "q", "mu"}, false, ValueKind::ComplexReal, pairwise(1, 2),
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        return real(pair_cot_sum(p, mu, q, prec), static_cast<std::size_t>(q - 1));
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        HPComplex s = pair_recip_sum(p, mu, q, prec) * -4;
        s.re += q - 1;
        return cplx(std::move(s), static_cast<std::size_t>(q - 1));
      },
      {axis("p", 1), axis("q", 2, keep_coprime2), axis("mu", 1, keep_coprime3)}, ""});

  out.push_back(IdentityDescriptor{
      "I22",
      "p mu C(p,mu;q) + q mu C(q,mu;p) + pq C(p,q;mu) = (p^2+q^2+mu^2)/3 - pq mu, C = cot.cot sum",
      {"p", "q", "mu"}, false, ValueKind::Real, pairwise(2, 2),
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        HPReal s = pair_cot_sum(p, mu, q, prec) * (p * mu);
        s += pair_cot_sum(q, mu, p, prec) * (q * mu);
        s += pair_cot_sum(p, q, mu, prec) * (p * q);
        return real(std::move(s), static_cast<std::size_t>(p + q + mu - 3));
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        return exact(Rational(p * p + q * q + mu * mu, 3) - Rational(p * q * mu), prec);
      },
      {axis("p", 2), axis("q", 2, keep_coprime2), axis("mu", 2, keep_coprime3)}, ""});

  out.push_back(IdentityDescriptor{
      "I23",
      "p C(p,mu;q) + q C(q,mu;p) = (p^2+q^2+mu^2)/(3mu) + (pq/(3mu))(mu^2-6mu+2), mu | p+q",
      {"p", "q", "mu"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        if (p < 1 || q < 1 || mu < 1) return "p, q, mu must be positive";
        if (!coprime(p, q)) return "gcd(p, q) must be 1";
        if ((p + q) % mu != 0) return "mu must divide p + q";
        return nullptr;
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        HPReal s = pair_cot_sum(p, mu, q, prec) * p;
        s += pair_cot_sum(q, mu, p, prec) * q;
        return real(std::move(s), static_cast<std::size_t>(p + q - 2));
      },
      [](const ParamSet& ps, Precision prec) {
        std::int64_t p = ps["p"], q = ps["q"], mu = ps["mu"];
        Rational r = Rational(p * p + q * q + mu * mu, 3 * mu) +
                     Rational(p * q, 3 * mu) * Rational(mu * mu - 6 * mu + 2);
        return exact(r, prec);
      },
      {axis("p", 1), axis("q", 1, keep_coprime2),
       axis("mu", 1, [](const Prefix& v) { return (v[0] + v[1]) % v[2] == 0; })},
      ""});
}

void add_dedekind(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I38", "s(h,k) + s(k,h) = -1/4 + (h/k + 1/(hk) + k/h)/12", {"h", "k"}, false,
      ValueKind::Rational,
      [](const ParamSet& ps) -> const char* {
        std::int64_t h = ps["h"], k = ps["k"];
        if (h < 1 || k < 1) return "h and k must be positive";
        if (!coprime(h, k)) return "gcd(h, k) must be 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t h = ps["h"], k = ps["k"];
        Evaluation e = exact(dedekind::dedekind_sum_exact(h, k) + dedekind::dedekind_sum_exact(k, h), p);
        e.terms = static_cast<std::size_t>(h + k);
        return e;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t h = ps["h"], k = ps["k"];
        Rational r = Rational(-1, 4) +
                     (Rational(h, k) + Rational(1, h * k) + Rational(k, h)) * Rational(1, 12);
        return exact(r, p);
      },
      {axis("h", 1), axis("k", 1, keep_coprime2)}, ""});

  out.push_back(IdentityDescriptor{
      "I39", "s(h,k) = (1/4k) sum_{n<k} cot(pi n/k) cot(pi hn/k)", {"h", "k"}, false,
      ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        std::int64_t h = ps["h"], k = ps["k"];
        if (h < 1) return "h must be positive";
        if (k < 2) return "k must be at least 2";
        if (!coprime(h, k)) return "gcd(h, k) must be 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t h = ps["h"], k = ps["k"];
        Evaluation e = exact(dedekind::dedekind_sum_exact(h, k), p);
        e.terms = static_cast<std::size_t>(k);
        return e;
      },
      [](const ParamSet& ps, Precision p) {
        std::int64_t h = ps["h"], k = ps["k"];
        return real(dedekind::dedekind_sum_cot(h, k, p), static_cast<std::size_t>(k - 1));
      },
      {axis("h", 1), axis("k", 2, keep_coprime2)}, ""});
}

}  // namespace

void add_cotangent(std::vector<IdentityDescriptor>& out) {
  add_lemma_shapes(out);
  add_three_sums(out);
  add_dedekind(out);
}

}  // namespace trigsum::catalog::detail
