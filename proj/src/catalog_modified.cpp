// Modified Dedekind sums S_{a,b}(h,k|mu), their tangent analogues T, and the
// mixed cot/tan sums, each against its root-of-unity closed form.

#include <string>

#include "catalog_internal.hpp"
#include "trigsum/dedekind.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::catalog::detail {

namespace {

using dedekind::complex_recip_sum;
using dedekind::Factor;
using dedekind::ModifiedSumParams;
using dedekind::Phase;
using dedekind::recip_root;
using dedekind::TermFamily;

struct Mod {
  std::int64_t h = 0, k = 0, mu = 1, a = 0, b = 0;
};

std::int64_t get_or(const ParamSet& ps, std::string_view name, std::int64_t dflt) {
  for (std::size_t i = 0; i < ps.names.size(); ++i)
    if (ps.names[i] == name) return ps.values[i];
  return dflt;
}

Mod read(const ParamSet& ps) {
  return Mod{ps["h"], ps["k"], get_or(ps, "mu", 1), get_or(ps, "alpha", 0), get_or(ps, "beta", 0)};
}

ModifiedSumParams forward(const Mod& m) { return ModifiedSumParams{m.a, m.b, m.h, m.k, m.mu}; }
ModifiedSumParams swapped(const Mod& m) { return ModifiedSumParams{m.b, m.a, m.k, m.h, m.mu}; }

// 1/(w_a^{k mu} + s), 1/(x_b^{h mu} + s), 1/(x_b^mu w_a^mu + s)
HPComplex rA(const Mod& m, int s, Precision p) { return recip_root(m.a * m.k * m.mu, m.h, s, p); }
HPComplex rB(const Mod& m, int s, Precision p) { return recip_root(m.b * m.h * m.mu, m.k, s, p); }
HPComplex rX(const Mod& m, int s, Precision p) {
  return recip_root(m.mu * (m.b * m.h + m.a * m.k), m.h * m.k, s, p);
}

// sum_{j=1}^{k-1} 1/((x_{j+b}^mu w_a^mu + s1)(x_j^h + s2))
TermFamily fam1(const Mod& m, int s1, int s2) {
  return TermFamily{1, m.k - 1,
                    {Factor{Phase{m.mu * m.h, m.mu * (m.b * m.h + m.a * m.k), m.h * m.k}, s1, 1},
                     Factor{Phase{m.h, 0, m.k}, s2, 1}},
                    std::nullopt};
}

// sum_{j=1}^{h-1} 1/((x_b^mu w_{a+j}^mu + s1)(w_j^k + s2))
TermFamily fam2(const Mod& m, int s1, int s2) {
  return TermFamily{1, m.h - 1,
                    {Factor{Phase{m.mu * m.k, m.mu * (m.b * m.h + m.a * m.k), m.h * m.k}, s1, 1},
                     Factor{Phase{m.k, 0, m.h}, s2, 1}},
                    std::nullopt};
}

// sum_{j=1}^{mu} 1/((v_j^k w_a^k + s1)(v_j^h x_b^h + s2))
TermFamily fam3(const Mod& m, int s1, int s2) {
  return TermFamily{1, m.mu,
                    {Factor{Phase{m.k * m.h, m.a * m.k * m.mu, m.mu * m.h}, s1, 1},
                     Factor{Phase{m.h * m.k, m.b * m.h * m.mu, m.mu * m.k}, s2, 1}},
                    std::nullopt};
}

HPComplex F1(const Mod& m, int s1, int s2, Precision p) { return complex_recip_sum(fam1(m, s1, s2), p); }
HPComplex F2(const Mod& m, int s1, int s2, Precision p) { return complex_recip_sum(fam2(m, s1, s2), p); }
HPComplex F3(const Mod& m, int s1, int s2, Precision p) { return complex_recip_sum(fam3(m, s1, s2), p); }

HPComplex scalar(const HPReal& v) { return HPComplex(v, HPReal(v.precision())); }
HPComplex scalar(long v, Precision p) { return HPComplex(HPReal(v, p), HPReal(p)); }
HPComplex scalar(const Rational& v, Precision p) { return HPComplex(HPReal(v, p), HPReal(p)); }

enum class Fn { Cot, Tan };

HPReal fn(Fn f, const Rational& x, Precision p) { return f == Fn::Cot ? cot_pi(x, p) : tan_pi(x, p); }

// sum_{j=1}^{mu} f(k(j/mu + a/h) pi) g(h(j/mu + b/k) pi)
HPReal mu_sum(const Mod& m, Fn f, Fn g, Precision p) {
  HPReal s(p);
  for (std::int64_t j = 1; j <= m.mu; ++j)
    s += fn(f, Rational(m.k * (j * m.h + m.a * m.mu), m.mu * m.h), p) *
         fn(g, Rational(m.h * (j * m.k + m.b * m.mu), m.mu * m.k), p);
  return s;
}

// mu (a/h + b/k) as a rational
Rational shift(const Mod& m) { return Rational(m.mu * (m.a * m.k + m.b * m.h), m.h * m.k); }

// sum_{j=1}^{k-1} cot(mu (j/k + a/h + b/k) pi) tan(j h pi/k)
HPReal cot_tan_k(const Mod& m, Precision p) {
  HPReal s(p);
  for (std::int64_t j = 1; j < m.k; ++j)
    s += cot_pi(Rational(m.mu * (j * m.h + m.a * m.k + m.b * m.h), m.h * m.k), p) *
         tan_pi(Rational(j * m.h, m.k), p);
  return s;
}

// sum_{j=1}^{h-1} tan(mu (j/h + a/h + b/k) pi) tan(j k pi/h)
HPReal tan_tan_h(const Mod& m, Precision p) {
  HPReal s(p);
  for (std::int64_t j = 1; j < m.h; ++j)
    s += tan_pi(Rational(m.mu * (j * m.k + m.a * m.k + m.b * m.h), m.h * m.k), p) *
         tan_pi(Rational(j * m.k, m.h), p);
  return s;
}

std::size_t sz(std::int64_t n) { return static_cast<std::size_t>(n); }

// ---- constraints ----

const char* cot_class(const ParamSet& ps) {
  Mod m = read(ps);
  if (m.h < 2 || m.k < 2) return "h and k must be at least 2";
  if (m.mu < 1) return "mu must be positive";
  if (!coprime(m.h, m.k) || !coprime(m.h, m.mu) || !coprime(m.k, m.mu))
    return "h, k, mu must be pairwise coprime";
  if (m.a < 1 || !coprime(m.a, m.h)) return "alpha must be positive with gcd(alpha, h) = 1";
  if (m.b < 1 || !coprime(m.b, m.k)) return "beta must be positive with gcd(beta, k) = 1";
  return nullptr;
}

const char* odd_triple(const Mod& m) {
  if (m.h < 3 || m.k < 3) return "h and k must be at least 3";
  if (m.h % 2 == 0 || m.k % 2 == 0) return "h and k must be odd";
  if (m.mu < 1 || m.mu % 2 == 0) return "mu must be odd and positive";
  if (!coprime(m.h, m.k) || !coprime(m.h, m.mu) || !coprime(m.k, m.mu))
    return "h, k, mu must be pairwise coprime";
  return nullptr;
}

bool zero_or_coprime(std::int64_t x, std::int64_t n) { return x == 0 || (x > 0 && coprime(x, n)); }

const char* tan_class(const ParamSet& ps) {
  Mod m = read(ps);
  if (const char* w = odd_triple(m)) return w;
  if (!zero_or_coprime(m.a, m.h)) return "alpha must be 0 or positive with gcd(alpha, h) = 1";
  if (!zero_or_coprime(m.b, m.k)) return "beta must be 0 or positive with gcd(beta, k) = 1";
  return nullptr;
}

const char* mixed_class(const ParamSet& ps) {
  Mod m = read(ps);
  if (const char* w = odd_triple(m)) return w;
  if (m.a < 1 || !coprime(m.a, m.h)) return "alpha must be positive with gcd(alpha, h) = 1";
  if (!zero_or_coprime(m.b, m.k)) return "beta must be 0 or positive with gcd(beta, k) = 1";
  return nullptr;
}

// ---- grids ----

bool keep_hk(const Prefix& v) { return coprime(v[0], v[1]); }
bool keep_hkmu(const Prefix& v) { return coprime(v[0], v[2]) && coprime(v[1], v[2]); }
bool last_odd(const Prefix& v) { return v.back() % 2 != 0; }
bool keep_odd_hk(const Prefix& v) { return v[1] % 2 != 0 && coprime(v[0], v[1]); }
bool keep_odd_hkmu(const Prefix& v) { return v[2] % 2 != 0 && keep_hkmu(v); }

// alpha over [lo, h-1] coprime to h (0 kept when lo = 0); h is v[hi_index]
Axis residue_axis(std::string name, std::int64_t lo, std::size_t mod_index) {
  return axis(
      std::move(name), fixed(lo), [mod_index](const Prefix& v, std::int64_t) { return v[mod_index] - 1; },
      [mod_index](const Prefix& v) { return v.back() == 0 || coprime(v.back(), v[mod_index]); });
}

std::vector<Axis> cot_axes() {
  return {axis("h", 2), axis("k", 2, keep_hk), axis("mu", 1, keep_hkmu), residue_axis("alpha", 1, 0),
          residue_axis("beta", 1, 1)};
}

std::vector<Axis> odd_axes(std::int64_t alpha_lo, bool with_beta) {
  std::vector<Axis> v{axis("h", 3, last_odd), axis("k", 3, keep_odd_hk), axis("mu", 1, keep_odd_hkmu),
                      residue_axis("alpha", alpha_lo, 0)};
  if (with_beta) v.push_back(residue_axis("beta", 0, 1));
  return v;
}

const std::vector<std::string> kFive{"h", "k", "mu", "alpha", "beta"};

// ---- the mixed cot/tan family ----

HPComplex i35a_rhs(const Mod& m, Precision p) {
  return rA(m, -1, p) * (2 * m.k) - rX(m, -1, p) * 2 - F1(m, -1, +1, p) * 4;
}

TermFamily fam2_variant(const Mod& m) {
  // x_j^mu w_{a+j}^mu in the first factor
  return TermFamily{1, m.h - 1,
                    {Factor{Phase{m.mu * (m.h + m.k), m.mu * m.a * m.k, m.h * m.k}, +1, 1},
                     Factor{Phase{m.k, 0, m.h}, +1, 1}},
                    std::nullopt};
}

HPComplex i35b_rhs(const Mod& m, Precision p, bool variant) {
  HPComplex f = variant ? complex_recip_sum(fam2_variant(m), p) : F2(m, +1, +1, p);
  return rB(m, +1, p) * (2 * m.h) - rX(m, +1, p) * 2 - f * 4;
}

HPComplex i35c_rhs(const Mod& m, Precision p) {
  HPComplex c = scalar(1, p) + rA(m, -1, p) * 2 - rB(m, +1, p) * 2;
  return c * m.mu - F3(m, -1, +1, p) * 4;
}

HPComplex i36_lhs(const Mod& m, Precision p) {
  return F1(m, -1, +1, p) * (m.h * m.mu) - F2(m, +1, +1, p) * (m.k * m.mu) +
         F3(m, -1, +1, p) * (m.h * m.k);
}

HPComplex i36_rhs(const Mod& m, Precision p, bool variant) {
  HPComplex r = (rA(m, -1, p) - rB(m, +1, p)) * (m.h * m.k * m.mu);
  r -= rX(m, -1, p) * scalar(Rational(m.h * m.mu, 2), p);
  Rational c = variant ? Rational(m.mu * (3 * m.k - 2), 2) : Rational(m.mu * m.k, 2);
  r += rX(m, +1, p) * scalar(c, p);
  return r;
}

HPReal i37_lhs(const Mod& m, Precision p) {
  HPReal s = cot_tan_k(m, p) * (m.h * m.mu);
  s -= tan_tan_h(m, p) * (m.k * m.mu);
  s += mu_sum(m, Fn::Cot, Fn::Tan, p) * (m.h * m.k);
  return s;
}

void add_cot_family(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I40", "sum_{j mod hk} e^(2 pi i j(a/h + b/k)) ((j/hk)) ((j h'/k)) = S_{a,b}(h,k) (cot form)",
      {"h", "k", "alpha", "beta"}, false, ValueKind::ComplexReal,
      [](const ParamSet& ps) -> const char* {
        Mod m = read(ps);
        if (m.h < 2 || m.k < 2) return "h and k must be at least 2";
        if (!coprime(m.h, m.k)) return "gcd(h, k) must be 1";
        if (m.a < 1 || !coprime(m.a, m.h)) return "alpha must be positive with gcd(alpha, h) = 1";
        if (m.b < 1 || !coprime(m.b, m.k)) return "beta must be positive with gcd(beta, k) = 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return cplx(dedekind::modified_S_definition(forward(m), p), sz(m.h * m.k));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(dedekind::modified_S_cot(forward(m), p), sz(m.k - 1));
      },
      {axis("h", 2), axis("k", 2, keep_hk), residue_axis("alpha", 1, 0), residue_axis("beta", 1, 1)},
      ""});

  out.push_back(IdentityDescriptor{
      "I24",
      "4k S_{a,b}(h,k|mu) = 2/(X-1) - 2k/(w_a^{k mu}-1) - 4 sum_{j<k} 1/((x_{j+b}^mu w_a^mu - 1)(x_j^h - 1))",
      kFive, false, ValueKind::ComplexReal, cot_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(dedekind::modified_S_cot(forward(m), p) * (4 * m.k), sz(m.k - 1));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex r = rX(m, -1, p) * 2 - rA(m, -1, p) * (2 * m.k) - F1(m, -1, -1, p) * 4;
        return cplx(std::move(r), sz(m.k + 1));
      },
      cot_axes(), ""});

  out.push_back(IdentityDescriptor{
      "I25",
      "sum_{j=1}^{mu} cot(k(j/mu + a/h) pi) cot(h(j/mu + b/k) pi) = -mu(1 + 2/(A-1) + 2/(B-1)) - 4 "
      "sum 1/((v_j^k w_a^k - 1)(v_j^h x_b^h - 1))",
      kFive, false, ValueKind::ComplexReal, cot_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(mu_sum(m, Fn::Cot, Fn::Cot, p), sz(m.mu));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex c = scalar(1, p) + rA(m, -1, p) * 2 + rB(m, -1, p) * 2;
        HPComplex r = c * -m.mu - F3(m, -1, -1, p) * 4;
        return cplx(std::move(r), sz(m.mu + 2));
      },
      cot_axes(), ""});

  out.push_back(IdentityDescriptor{
      "I26", "h mu F1 + k mu F2 + hk F3 = -hk mu (1/(A-1) + 1/(B-1)) + mu(mu + k/2 + h/2)/(X-1) + mu^2/(X-1)^2",
      kFive, false, ValueKind::Complex, cot_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex s = F1(m, -1, -1, p) * (m.h * m.mu) + F2(m, -1, -1, p) * (m.k * m.mu) +
                      F3(m, -1, -1, p) * (m.h * m.k);
        return cplx(std::move(s), sz(m.h + m.k + m.mu - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex x = rX(m, -1, p);
        HPComplex r = (rA(m, -1, p) + rB(m, -1, p)) * (-m.h * m.k * m.mu);
        r += x * scalar(Rational(m.mu) * (Rational(m.mu) + Rational(m.k + m.h, 2)), p);
        r += x * x * (m.mu * m.mu);
        return cplx(std::move(r), 3);
      },
      cot_axes(), ""});

  out.push_back(IdentityDescriptor{
      "I27",
      "4hk mu (S_{a,b}(h,k|mu) + S_{b,a}(k,h|mu)) = mu^2 csc^2(mu(a/h + b/k) pi) - hk mu - hk sum cot.cot",
      kFive, false, ValueKind::Real, cot_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal s = dedekind::modified_S_cot(forward(m), p) + dedekind::modified_S_cot(swapped(m), p);
        return real(s * (4 * m.h * m.k * m.mu), sz(m.h + m.k - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal r = square(csc_pi(shift(m), p)) * (m.mu * m.mu);
        r -= m.h * m.k * m.mu;
        r -= mu_sum(m, Fn::Cot, Fn::Cot, p) * (m.h * m.k);
        return real(std::move(r), sz(m.mu + 1));
      },
      cot_axes(), ""});

  out.push_back(IdentityDescriptor{
      "I28",
      "4hk (S_{a,b}(h,k) + S_{b,a}(k,h)) = csc^2(pi(a/h + b/k)) - hk(1 + cot(k a pi/h) cot(h b pi/k))",
      {"h", "k", "alpha", "beta"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        Mod m = read(ps);
        if (m.h < 2 || m.k < 2) return "h and k must be at least 2";
        if (!coprime(m.h, m.k)) return "gcd(h, k) must be 1";
        if (m.a < 1 || !coprime(m.a, m.h)) return "alpha must be positive with gcd(alpha, h) = 1";
        if (m.b < 1 || !coprime(m.b, m.k)) return "beta must be positive with gcd(beta, k) = 1";
        return nullptr;
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal s = dedekind::modified_S_cot(forward(m), p) + dedekind::modified_S_cot(swapped(m), p);
        return real(s * (4 * m.h * m.k), sz(m.h + m.k - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal cc = cot_pi(Rational(m.k * m.a, m.h), p) * cot_pi(Rational(m.h * m.b, m.k), p);
        cc += 1;
        HPReal r = square(csc_pi(shift(m), p)) - cc * (m.h * m.k);
        return real(std::move(r), 3);
      },
      {axis("h", 2), axis("k", 2, keep_hk), residue_axis("alpha", 1, 0), residue_axis("beta", 1, 1)},
      ""});
}

void add_tan_family(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I29",
      "4k T_{a,b}(h,k|mu) = 2/(X+1) - 2k/(w_a^{k mu}+1) - 4 sum_{j<k} 1/((x_{j+b}^mu w_a^mu + 1)(x_j^h - 1))",
      kFive, false, ValueKind::ComplexReal, tan_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(dedekind::modified_T_cot(forward(m), p) * (4 * m.k), sz(m.k - 1));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex r = rX(m, +1, p) * 2 - rA(m, +1, p) * (2 * m.k) - F1(m, +1, -1, p) * 4;
        return cplx(std::move(r), sz(m.k + 1));
      },
      odd_axes(0, true), ""});

  out.push_back(IdentityDescriptor{
      "I30",
      "sum_{j=1}^{mu} tan(k(j/mu + a/h) pi) tan(h(j/mu + b/k) pi) = mu(2/(A+1) + 2/(B+1) - 1) - 4 "
      "sum 1/((v_j^k w_a^k + 1)(v_j^h x_b^h + 1))",
      kFive, false, ValueKind::ComplexReal, tan_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(mu_sum(m, Fn::Tan, Fn::Tan, p), sz(m.mu));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex c = rA(m, +1, p) * 2 + rB(m, +1, p) * 2 - scalar(1, p);
        HPComplex r = c * m.mu - F3(m, +1, +1, p) * 4;
        return cplx(std::move(r), sz(m.mu + 2));
      },
      odd_axes(0, true), ""});

  out.push_back(IdentityDescriptor{
      "I31",
      "h mu F1 + k mu F2 - hk F3 = -hk mu (1/(A+1) + 1/(B+1)) + mu(mu + k/2 + h/2)/(X+1) - mu^2/(X+1)^2",
      kFive, false, ValueKind::Complex, tan_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex s = F1(m, +1, -1, p) * (m.h * m.mu) + F2(m, +1, -1, p) * (m.k * m.mu) -
                      F3(m, +1, +1, p) * (m.h * m.k);
        return cplx(std::move(s), sz(m.h + m.k + m.mu - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPComplex x = rX(m, +1, p);
        HPComplex r = (rA(m, +1, p) + rB(m, +1, p)) * (-m.h * m.k * m.mu);
        r += x * scalar(Rational(m.mu) * (Rational(m.mu) + Rational(m.k + m.h, 2)), p);
        r -= x * x * (m.mu * m.mu);
        return cplx(std::move(r), 3);
      },
      odd_axes(0, true), ""});

  out.push_back(IdentityDescriptor{
      "I32",
      "4hk mu (T_{a,b}(h,k|mu) + T_{b,a}(k,h|mu)) = -mu^2 sec^2(mu(a/h + b/k) pi) + hk mu + hk sum tan.tan",
      kFive, false, ValueKind::Real, tan_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal s = dedekind::modified_T_cot(forward(m), p) + dedekind::modified_T_cot(swapped(m), p);
        return real(s * (4 * m.h * m.k * m.mu), sz(m.h + m.k - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal r = -square(sec_pi(shift(m), p)) * (m.mu * m.mu);
        r += m.h * m.k * m.mu;
        r += mu_sum(m, Fn::Tan, Fn::Tan, p) * (m.h * m.k);
        return real(std::move(r), sz(m.mu + 1));
      },
      odd_axes(0, true), ""});

  // alpha = beta = 0 and beta = 0 instances, written out as sums
  auto tan_three = [](const ParamSet& ps, Precision p) {
    Mod m = read(ps);
    HPReal s = dedekind::modified_T_cot(forward(m), p) * (4 * m.k * m.h * m.mu);
    s += dedekind::modified_T_cot(swapped(m), p) * (4 * m.h * m.k * m.mu);
    s -= mu_sum(m, Fn::Tan, Fn::Tan, p) * (m.h * m.k);
    return real(std::move(s), sz(m.h + m.k + m.mu - 2));
  };

  out.push_back(IdentityDescriptor{
      "I33",
      "h mu sum tan(mu j pi/k) cot(h j pi/k) + k mu sum tan(mu j pi/h) cot(k j pi/h) - hk sum "
      "tan(k j pi/mu) tan(h j pi/mu) = -mu^2 + hk mu",
      {"h", "k", "mu"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* { return odd_triple(read(ps)); }, tan_three,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return exact(Rational(m.h * m.k * m.mu - m.mu * m.mu), p);
      },
      {axis("h", 3, last_odd), axis("k", 3, keep_odd_hk), axis("mu", 1, keep_odd_hkmu)}, ""});

  out.push_back(IdentityDescriptor{
      "I34",
      "h mu sum tan(mu(j/k + a/h) pi) cot(h j pi/k) + k mu sum tan(mu(j/h + a/h) pi) cot(k j pi/h) - hk "
      "sum tan(k(j/mu + a/h) pi) tan(h j pi/mu) = -mu^2 sec^2(mu a pi/h) + hk mu",
      {"h", "k", "mu", "alpha"}, false, ValueKind::Real,
      [](const ParamSet& ps) -> const char* {
        Mod m = read(ps);
        if (const char* w = odd_triple(m)) return w;
        if (!zero_or_coprime(m.a, m.h)) return "alpha must be 0 or positive with gcd(alpha, h) = 1";
        return nullptr;
      },
      tan_three,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        HPReal r = -square(sec_pi(Rational(m.mu * m.a, m.h), p)) * (m.mu * m.mu);
        r += m.h * m.k * m.mu;
        return real(std::move(r), 1);
      },
      odd_axes(0, false), ""});
}

void add_mixed_family(std::vector<IdentityDescriptor>& out) {
  out.push_back(IdentityDescriptor{
      "I35a",
      "sum_{j<k} cot(mu(j/k + a/h + b/k) pi) tan(j h pi/k) = 2k/(A-1) - 2/(X-1) - 4 sum_{j<k} "
      "1/((x_{j+b}^mu w_a^mu - 1)(x_j^h + 1))",
      kFive, false, ValueKind::ComplexReal, mixed_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(cot_tan_k(m, p), sz(m.k - 1));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return cplx(i35a_rhs(m, p), sz(m.k + 1));
      },
      odd_axes(1, true), ""});

  out.push_back(IdentityDescriptor{
      "I35b",
      "sum_{j<h} tan(mu(j/h + a/h + b/k) pi) tan(j k pi/h) = 2h/(B+1) - 2/(X+1) - 4 sum_{j<h} "
      "1/((x_b^mu w_{a+j}^mu + 1)(w_j^k + 1))",
      kFive, false, ValueKind::ComplexReal, mixed_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(tan_tan_h(m, p), sz(m.h - 1));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return cplx(i35b_rhs(m, p, false), sz(m.h + 1));
      },
      odd_axes(1, true), ""});

  out.push_back(IdentityDescriptor{
      "I35c",
      "sum_{j=1}^{mu} cot(k(j/mu + a/h) pi) tan(h(j/mu + b/k) pi) = mu(1 + 2/(A-1) - 2/(B+1)) - 4 "
      "sum 1/((v_j^k w_a^k - 1)(v_j^h x_b^h + 1))",
      kFive, false, ValueKind::ComplexReal, mixed_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(mu_sum(m, Fn::Cot, Fn::Tan, p), sz(m.mu));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return cplx(i35c_rhs(m, p), sz(m.mu + 2));
      },
      odd_axes(1, true), ""});

  out.push_back(IdentityDescriptor{
      "I36",
      "h mu F1(-,+) - k mu F2(+,+) + hk F3(-,+) = hk mu (1/(A-1) - 1/(B+1)) - h mu/(2(X-1)) + mu k/(2(X+1))",
      kFive, false, ValueKind::Complex, mixed_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return cplx(i36_lhs(m, p), sz(m.h + m.k + m.mu - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return cplx(i36_rhs(m, p, false), 4);
      },
      odd_axes(1, true), ""});

  out.push_back(IdentityDescriptor{
      "I37",
      "h mu sum cot.tan (k) - k mu sum tan.tan (h) + hk sum cot.tan (mu) = hk mu", kFive, false,
      ValueKind::Real, mixed_class,
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return real(i37_lhs(m, p), sz(m.h + m.k + m.mu - 2));
      },
      [](const ParamSet& ps, Precision p) {
        Mod m = read(ps);
        return exact(Rational(m.h * m.k * m.mu), p);
      },
      odd_axes(1, true), ""});
}

}  // namespace

void add_modified(std::vector<IdentityDescriptor>& out) {
  add_cot_family(out);
  add_tan_family(out);
  add_mixed_family(out);
}

Evaluation variant_closed_modified(std::string_view id, const ParamSet& ps, Precision p) {
  Mod m = read(ps);
  if (id == "I35b") return cplx(i35b_rhs(m, p, true), sz(m.h + 1));
  if (id == "I36") return cplx(i36_rhs(m, p, true), 4);
  if (id == "I37") {
    HPComplex r = rX(m, +1, p) * (-4 * m.mu * (m.k - 1));
    r.re += m.h * m.k * m.mu;
    return cplx(std::move(r), 2);
  }
  throw DomainError("no variant closed form for '" + std::string(id) + "'");
}

}  // namespace trigsum::catalog::detail
