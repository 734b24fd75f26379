#include <string>

#include "trigsum/dedekind.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::dedekind {

namespace {

void check_factor(const Factor& f, std::int64_t j) {
  std::int64_t e = f.phase.exponent(j);
  RootKind kind = is_root_one_or_minus_one(e, f.phase.order);
  bool zero = (f.sign < 0 && kind == RootKind::One) || (f.sign > 0 && kind == RootKind::MinusOne);
  if (zero)
    throw SingularTerm("complex_recip_sum: vanishing denominator at term " + std::to_string(j),
                       Rational(mod_floor(e, f.phase.order), f.phase.order), j);
}

}  // namespace

HPComplex recip_root(std::int64_t e, std::int64_t order, int sign, Precision p) {
  Factor f{Phase{0, e, order}, sign, 1};
  check_factor(f, 0);
  HPComplex z = root_of_unity(e, order, p);
  z.re += sign;
  return reciprocal(z);
}

HPComplex complex_recip_sum(const TermFamily& fam, Precision p) {
  for (std::int64_t j = fam.lo; j <= fam.hi; ++j)
    for (const Factor& f : fam.factors) check_factor(f, j);
  HPComplex s(p);
  for (std::int64_t j = fam.lo; j <= fam.hi; ++j) {
    HPComplex den(HPReal(1, p), HPReal(p));
    for (const Factor& f : fam.factors) {
      HPComplex z = root_of_unity(f.phase.exponent(j), f.phase.order, p);
      z.re += f.sign;
      den *= f.power == 1 ? z : pow(z, f.power);
    }
    HPComplex term = reciprocal(den);
    if (fam.numerator)
      term *= root_of_unity(fam.numerator->exponent(j), fam.numerator->order, p);
    s += term;
  }
  return s;
}

HPComplex pair_recip_sum(std::int64_t u, std::int64_t v, std::int64_t q, Precision p) {
  TermFamily fam;
  fam.lo = 1;
  fam.hi = q - 1;
  fam.factors = {Factor{Phase{u, 0, q}, -1, 1}, Factor{Phase{v, 0, q}, -1, 1}};
  return complex_recip_sum(fam, p);
}

}  // namespace trigsum::dedekind
