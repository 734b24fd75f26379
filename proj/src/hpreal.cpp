#include "trigsum/hpreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trigsum/errors.hpp"

namespace trigsum {

Precision::Precision(long b) : bits(b) {
  if (b < kMinBits) throw DomainError("precision must be at least 64 bits");
  if (b > MPFR_PREC_MAX) throw DomainError("precision too large");
}

int Precision::decimal_digits() const {
  return 1 + static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120));
}

namespace {

mpfr_prec_t wider(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

void widen(mpfr_ptr a, mpfr_prec_t p) {
  if (mpfr_get_prec(a) < p) mpfr_prec_round(a, p, MPFR_RNDN);
}

}  // namespace

HPReal::HPReal(Precision p) {
  mpfr_init2(x_, p.bits);
  mpfr_set_zero(x_, 1);
}

HPReal::HPReal(long v, Precision p) {
  mpfr_init2(x_, p.bits);
  mpfr_set_si(x_, v, MPFR_RNDN);
}

HPReal::HPReal(const Rational& r, Precision p) {
  mpfr_init2(x_, p.bits);
  if (r.is_integer()) {
    mpfr_set_si(x_, r.num(), MPFR_RNDN);
  } else {
    mpq_class q(static_cast<long>(r.num()), static_cast<unsigned long>(r.den()));
    mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
  }
}

HPReal::HPReal(const mpz_class& z, Precision p) {
  mpfr_init2(x_, p.bits);
  mpfr_set_z(x_, z.get_mpz_t(), MPFR_RNDN);
}

HPReal HPReal::from_double(double d, Precision p) {
  HPReal r(p);
  mpfr_set_d(r.x_, d, MPFR_RNDN);
  return r;
}

HPReal HPReal::parse(const std::string& s, Precision p) {
  HPReal r(p);
  if (s.empty() || mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("not a decimal number: '" + s + "'");
  return r;
}

HPReal HPReal::pi(Precision p) {
  HPReal r(p);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

HPReal::HPReal(const HPReal& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept {
  x_[0] = o.x_[0];
  o.x_->_mpfr_d = nullptr;
}

void HPReal::ensure_live(mpfr_prec_t p) {
  if (x_->_mpfr_d == nullptr)
    mpfr_init2(x_, p);
  else
    mpfr_set_prec(x_, p);
}

HPReal& HPReal::operator=(const HPReal& o) {
  if (this == &o) return *this;
  ensure_live(mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
  if (this == &o) return *this;
  if (x_->_mpfr_d != nullptr) mpfr_clear(x_);
  x_[0] = o.x_[0];
  o.x_->_mpfr_d = nullptr;
  return *this;
}

HPReal::~HPReal() {
  if (x_->_mpfr_d != nullptr) mpfr_clear(x_);
}

Precision HPReal::precision() const { return Precision(mpfr_get_prec(x_)); }

HPReal& HPReal::operator+=(const HPReal& o) {
  widen(x_, mpfr_get_prec(o.x_));
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& o) {
  widen(x_, mpfr_get_prec(o.x_));
  mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& o) {
  widen(x_, mpfr_get_prec(o.x_));
  mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& o) {
  widen(x_, mpfr_get_prec(o.x_));
  mpfr_div(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator+=(long v) {
  mpfr_add_si(x_, x_, v, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator-=(long v) {
  mpfr_sub_si(x_, x_, v, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator*=(long v) {
  mpfr_mul_si(x_, x_, v, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator/=(long v) {
  mpfr_div_si(x_, x_, v, MPFR_RNDN);
  return *this;
}

HPReal& HPReal::operator+=(const Rational& r) {
  if (r.is_integer()) return *this += static_cast<long>(r.num());
  return *this += HPReal(r, precision());
}

HPReal& HPReal::operator*=(const Rational& r) {
  if (r.is_integer()) return *this *= static_cast<long>(r.num());
  return *this *= HPReal(r, precision());
}

HPReal HPReal::operator-() const {
  HPReal r(*this);
  mpfr_neg(r.x_, r.x_, MPFR_RNDN);
  return r;
}

long HPReal::round_to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

std::string HPReal::to_decimal(int digits) const {
  if (digits <= 0) digits = precision().decimal_digits();
  if (mpfr_zero_p(x_)) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
HPReal operator+(HPReal a, long b) { return a += b; }
HPReal operator-(HPReal a, long b) { return a -= b; }
HPReal operator*(HPReal a, long b) { return a *= b; }
HPReal operator/(HPReal a, long b) { return a /= b; }
HPReal operator*(long a, HPReal b) { return b *= a; }
HPReal operator*(HPReal a, const Rational& b) { return a *= b; }
HPReal operator+(HPReal a, const Rational& b) { return a += b; }

bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.raw(), b.raw()); }
bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()); }
bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.raw(), b.raw()); }
bool operator>=(const HPReal& a, const HPReal& b) {
  return mpfr_greaterequal_p(a.raw(), b.raw());
}
bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.raw(), b.raw()); }

HPReal abs(HPReal a) {
  mpfr_abs(a.raw(), a.raw(), MPFR_RNDN);
  return a;
}

HPReal sqrt(HPReal a) {
  mpfr_sqrt(a.raw(), a.raw(), MPFR_RNDN);
  return a;
}

HPReal log(HPReal a) {
  mpfr_log(a.raw(), a.raw(), MPFR_RNDN);
  return a;
}

HPReal exp(HPReal a) {
  mpfr_exp(a.raw(), a.raw(), MPFR_RNDN);
  return a;
}

HPReal square(HPReal a) {
  mpfr_sqr(a.raw(), a.raw(), MPFR_RNDN);
  return a;
}

HPReal pow(HPReal a, long n) {
  mpfr_pow_si(a.raw(), a.raw(), n, MPFR_RNDN);
  return a;
}

HPReal max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }

HPReal tau(std::size_t terms, Precision p) {
  HPReal t(p);
  mpfr_set_ui(t.raw(), static_cast<unsigned long>(terms), MPFR_RNDN);
  mpfr_mul_2si(t.raw(), t.raw(), -p.bits + 32, MPFR_RNDN);
  return t;
}

HPComplex& HPComplex::operator+=(const HPComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o) {
  HPReal r = re * o.re - im * o.im;
  HPReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
  HPReal d = square(o.re) + square(o.im);
  HPReal r = (re * o.re + im * o.im) / d;
  HPReal i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

HPComplex& HPComplex::operator*=(const HPReal& s) {
  re *= s;
  im *= s;
  return *this;
}

HPComplex& HPComplex::operator*=(long s) {
  re *= s;
  im *= s;
  return *this;
}

HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
HPComplex operator*(HPComplex a, long s) { return a *= s; }
HPComplex operator*(HPComplex a, const HPReal& s) { return a *= s; }

HPComplex operator+(HPComplex a, long s) {
  a.re += s;
  return a;
}

HPComplex conj(HPComplex a) {
  a.im = -a.im;
  return a;
}

HPReal abs(const HPComplex& a) {
  HPReal r(a.precision());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return r;
}

HPComplex reciprocal(const HPComplex& a) {
  HPReal d = square(a.re) + square(a.im);
  return HPComplex(a.re / d, -a.im / d);
}

HPComplex pow(HPComplex a, long n) {
  if (n < 0) return pow(reciprocal(a), -n);
  HPComplex r(HPReal(1, a.precision()), HPReal(a.precision()));
  while (n > 0) {
    if (n & 1) r *= a;
    n >>= 1;
    if (n > 0) a *= a;
  }
  return r;
}

}  // namespace trigsum
