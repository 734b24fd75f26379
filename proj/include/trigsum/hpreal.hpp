#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "trigsum/rational.hpp"

namespace trigsum {

// Binary precision of a computation. Passed explicitly everywhere.
struct Precision {
  static constexpr long kDefaultBits = 256;
  static constexpr long kMinBits = 64;

  long bits = kDefaultBits;

  Precision() = default;
  explicit Precision(long b);

  Precision doubled() const { return Precision(bits * 2); }
  Precision plus(long extra) const { return Precision(bits + extra); }
  // Number of significant decimal digits carried by this precision.
  int decimal_digits() const;

  friend bool operator==(Precision a, Precision b) { return a.bits == b.bits; }
};

// Arbitrary precision real backed by MPFR, rounded to nearest.
// Binary operations produce a result at the larger of the two precisions.
class HPReal {
 public:
  explicit HPReal(Precision p = Precision());
  HPReal(long v, Precision p);
  HPReal(const Rational& r, Precision p);
  HPReal(const mpz_class& z, Precision p);
  static HPReal from_double(double d, Precision p);
  static HPReal parse(const std::string& s, Precision p);
  static HPReal pi(Precision p);

  HPReal(const HPReal& o);
  HPReal(HPReal&& o) noexcept;
  HPReal& operator=(const HPReal& o);
  HPReal& operator=(HPReal&& o) noexcept;
  ~HPReal();

  Precision precision() const;
  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  HPReal& operator+=(const HPReal& o);
  HPReal& operator-=(const HPReal& o);
  HPReal& operator*=(const HPReal& o);
  HPReal& operator/=(const HPReal& o);
  HPReal& operator+=(long v);
  HPReal& operator-=(long v);
  HPReal& operator*=(long v);
  HPReal& operator/=(long v);
  HPReal& operator+=(const Rational& r);
  HPReal& operator*=(const Rational& r);

  HPReal operator-() const;

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Nearest integer; caller is responsible for range.
  long round_to_long() const;

  // Decimal rendering with the given number of significant digits
  // (0 means all digits the precision carries). Trailing zeros trimmed.
  std::string to_decimal(int digits = 0) const;

 private:
  void ensure_live(mpfr_prec_t p);

  mpfr_t x_;
};

HPReal operator+(HPReal a, const HPReal& b);
HPReal operator-(HPReal a, const HPReal& b);
HPReal operator*(HPReal a, const HPReal& b);
HPReal operator/(HPReal a, const HPReal& b);
HPReal operator+(HPReal a, long b);
HPReal operator-(HPReal a, long b);
HPReal operator*(HPReal a, long b);
HPReal operator/(HPReal a, long b);
HPReal operator*(long a, HPReal b);
HPReal operator*(HPReal a, const Rational& b);
HPReal operator+(HPReal a, const Rational& b);

bool operator<(const HPReal& a, const HPReal& b);
bool operator<=(const HPReal& a, const HPReal& b);
bool operator>(const HPReal& a, const HPReal& b);
bool operator>=(const HPReal& a, const HPReal& b);
bool operator==(const HPReal& a, const HPReal& b);

HPReal abs(HPReal a);
HPReal sqrt(HPReal a);
HPReal log(HPReal a);
HPReal exp(HPReal a);
HPReal square(HPReal a);
HPReal pow(HPReal a, long n);
HPReal max(const HPReal& a, const HPReal& b);

// Error budget for an N-term computation at precision P: N * 2^(-P+32).
HPReal tau(std::size_t terms, Precision p);

class HPComplex {
 public:
  explicit HPComplex(Precision p = Precision()) : re(p), im(p) {}
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}

  HPComplex& operator+=(const HPComplex& o);
  HPComplex& operator-=(const HPComplex& o);
  HPComplex& operator*=(const HPComplex& o);
  HPComplex& operator/=(const HPComplex& o);
  HPComplex& operator*=(const HPReal& s);
  HPComplex& operator*=(long s);
  HPComplex operator-() const { return HPComplex(-re, -im); }

  Precision precision() const { return re.precision(); }

  HPReal re;
  HPReal im;
};

HPComplex operator+(HPComplex a, const HPComplex& b);
HPComplex operator-(HPComplex a, const HPComplex& b);
HPComplex operator*(HPComplex a, const HPComplex& b);
HPComplex operator/(HPComplex a, const HPComplex& b);
HPComplex operator*(HPComplex a, long s);
HPComplex operator*(HPComplex a, const HPReal& s);
HPComplex operator+(HPComplex a, long s);
HPComplex conj(HPComplex a);
HPReal abs(const HPComplex& a);
HPComplex reciprocal(const HPComplex& a);
HPComplex pow(HPComplex a, long n);

}  // namespace trigsum
