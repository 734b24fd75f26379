#include "trigsum/rational.hpp"

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace trigsum {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  *this = from128(n, d);
}

Rational Rational::from128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (!fits64(n) || !fits64(d)) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::mod(std::int64_t m) const {
  if (m <= 0) throw std::invalid_argument("Rational::mod: modulus must be positive");
  __int128 period = static_cast<__int128>(m) * den_;
  __int128 n = num_ % period;
  if (n < 0) n += period;
  return from128(n, den_);
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = from128(static_cast<__int128>(num_) + o.num_, den_);
  __int128 g = gcd128(den_, o.den_);
  __int128 n = static_cast<__int128>(num_) * (o.den_ / g) +
               static_cast<__int128>(o.num_) * (den_ / g);
  __int128 d = static_cast<__int128>(den_ / g) * o.den_;
  return *this = from128(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  __int128 g1 = gcd128(num_, o.den_);
  __int128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = (num_ / g1) * static_cast<__int128>(o.num_ / g2);
  __int128 d = (den_ / g2) * static_cast<__int128>(o.den_ / g1);
  return *this = from128(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this = from128(static_cast<__int128>(num_) * o.den_,
                         static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trigsum
