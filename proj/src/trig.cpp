#include "trigsum/trig.hpp"

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

constexpr long kGuard = 24;

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);
const Rational kSixth(1, 6);

// sin(pi y) or cos(pi y) for y in [0, 1/4], at working precision w.
HPReal kernel(const Rational& y, bool want_sin, Precision w) {
  if (y.is_zero()) return HPReal(want_sin ? 0 : 1, w);
  if (want_sin && y == kSixth) return HPReal(Rational(1, 2), w);
  if (y == kQuarter) {
    HPReal r = sqrt(HPReal(2, w));
    r /= 2;
    return r;
  }
  HPReal t = HPReal::pi(w);
  t *= static_cast<long>(y.num());
  t /= static_cast<long>(y.den());
  if (want_sin)
    mpfr_sin(t.raw(), t.raw(), MPFR_RNDN);
  else
    mpfr_cos(t.raw(), t.raw(), MPFR_RNDN);
  return t;
}

HPReal round_to(const HPReal& v, Precision p) {
  HPReal r(p);
  mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
  return r;
}

// Folds x in [0, 2) to y in [0, 1/4] and records how sin/cos of pi x map
// onto sin/cos of pi y.
struct Fold {
  Rational y;
  bool swap = false;  // sin(pi x) = +-cos(pi y)
  int sin_sign = 1;
  int cos_sign = 1;
};

Fold fold(const Rational& r) {
  Fold f;
  Rational x = r.mod(2);
  if (x >= Rational(1)) {
    x -= Rational(1);
    f.sin_sign = -1;
    f.cos_sign = -1;
  }
  if (x > kHalf) {
    x = Rational(1) - x;
    f.cos_sign = -f.cos_sign;
  }
  if (x > kQuarter) {
    f.y = kHalf - x;
    f.swap = true;
  } else {
    f.y = x;
  }
  return f;
}

HPReal sin_work(const Rational& r, Precision w) {
  Fold f = fold(r);
  HPReal v = kernel(f.y, !f.swap, w);
  return f.sin_sign < 0 ? -v : v;
}

HPReal cos_work(const Rational& r, Precision w) {
  Fold f = fold(r);
  HPReal v = kernel(f.y, f.swap, w);
  return f.cos_sign < 0 ? -v : v;
}

bool half_odd(const Rational& r) { return r.den() == 2; }

// tan(pi x) for x in [0, 1) with x != 1/2.
HPReal tan_work(const Rational& r, Precision w) {
  Rational x = r.mod(1);
  int sign = 1;
  if (x > kHalf) {
    x = Rational(1) - x;
    sign = -1;
  }
  HPReal v(w);
  if (x.is_zero()) {
    v = HPReal(0, w);
  } else if (x == kQuarter) {
    v = HPReal(1, w);
  } else if (x > kQuarter) {
    Rational y = kHalf - x;
    v = kernel(y, false, w) / kernel(y, true, w);
  } else {
    v = kernel(x, true, w) / kernel(x, false, w);
  }
  return sign < 0 ? -v : v;
}

}  // namespace

HPReal sin_pi(const Rational& r, Precision p) { return round_to(sin_work(r, p.plus(kGuard)), p); }

HPReal cos_pi(const Rational& r, Precision p) { return round_to(cos_work(r, p.plus(kGuard)), p); }

HPReal tan_pi(const Rational& r, Precision p) {
  if (half_odd(r)) throw SingularTerm("tan_pi: pole at " + r.mod(1).str(), r.mod(1));
  return round_to(tan_work(r, p.plus(kGuard)), p);
}

HPReal cot_pi(const Rational& r, Precision p) {
  Rational x = r.mod(1);
  if (x.is_zero()) throw SingularTerm("cot_pi: pole at " + x.str(), x);
  return round_to(tan_work(kHalf - x, p.plus(kGuard)), p);
}

HPReal csc_pi(const Rational& r, Precision p) {
  if (r.is_integer()) throw SingularTerm("csc_pi: pole at " + r.mod(2).str(), r.mod(2));
  Precision w = p.plus(kGuard);
  HPReal one(1, w);
  return round_to(one / sin_work(r, w), p);
}

HPReal sec_pi(const Rational& r, Precision p) {
  if (half_odd(r)) throw SingularTerm("sec_pi: pole at " + r.mod(2).str(), r.mod(2));
  Precision w = p.plus(kGuard);
  HPReal one(1, w);
  return round_to(one / cos_work(r, w), p);
}

SinCos sincos_pi(const Rational& r, Precision p) {
  Precision w = p.plus(kGuard);
  Fold f = fold(r);
  HPReal s = kernel(f.y, true, w);
  HPReal c = kernel(f.y, false, w);
  if (f.swap) std::swap(s, c);
  if (f.sin_sign < 0) s = -s;
  if (f.cos_sign < 0) c = -c;
  return SinCos{round_to(s, p), round_to(c, p)};
}

std::int64_t mod_floor(std::int64_t n, std::int64_t k) {
  std::int64_t r = n % k;
  return r < 0 ? r + k : r;
}

HPComplex root_of_unity(std::int64_t n, std::int64_t k, Precision p) {
  if (k < 1) throw DomainError("root_of_unity: order must be positive");
  std::int64_t e = mod_floor(n, k);
  SinCos sc = sincos_pi(Rational(2 * e, k), p);
  return HPComplex(std::move(sc.cos), std::move(sc.sin));
}

RootKind is_root_one_or_minus_one(std::int64_t n, std::int64_t k) {
  if (k < 1) throw DomainError("is_root_one_or_minus_one: order must be positive");
  std::int64_t e = mod_floor(n, k);
  if (e == 0) return RootKind::One;
  if (k % 2 == 0 && e == k / 2) return RootKind::MinusOne;
  return RootKind::Neither;
}

}  // namespace trigsum
