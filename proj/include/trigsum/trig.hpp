#pragma once

#include <cstdint>

#include "trigsum/hpreal.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

// Trigonometric functions at r*pi for exact rational r. The argument is
// reduced exactly (mod 2, then by symmetry into [0, 1/4]) before MPFR sees
// it, and 0, 1/2, 1 are returned exactly wherever they occur.
HPReal sin_pi(const Rational& r, Precision p);
HPReal cos_pi(const Rational& r, Precision p);
HPReal tan_pi(const Rational& r, Precision p);  // SingularTerm at half-odd r
HPReal cot_pi(const Rational& r, Precision p);  // SingularTerm at integer r
HPReal csc_pi(const Rational& r, Precision p);  // SingularTerm at integer r
HPReal sec_pi(const Rational& r, Precision p);  // SingularTerm at half-odd r

struct SinCos {
  HPReal sin;
  HPReal cos;
};
SinCos sincos_pi(const Rational& r, Precision p);

// e^(2 pi i n / k), exponent reduced mod k first.
HPComplex root_of_unity(std::int64_t n, std::int64_t k, Precision p);

enum class RootKind { One, MinusOne, Neither };

// Exact test of e^(2 pi i n / k) against 1 and -1.
RootKind is_root_one_or_minus_one(std::int64_t n, std::int64_t k);

// n mod k in [0, k).
std::int64_t mod_floor(std::int64_t n, std::int64_t k);

}  // namespace trigsum
