#include "trigsum/quadfield.hpp"

#include <string>

#include "trigsum/errors.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::quadfield {

namespace {

void check_p(std::int64_t p) {
  if (!ntheory::is_prime(p) || p % 4 != 1)
    throw DomainError("p must be a prime = 1 (mod 4), got " + std::to_string(p));
}

}  // namespace

HPReal unit_value(const ntheory::PellUnit& u, std::int64_t p, Precision prec) {
  HPReal r = sqrt(HPReal(p, prec));
  r *= HPReal(u.y, prec);
  r += HPReal(u.x, prec);
  r /= 2;
  return r;
}

HPReal dirichlet_class_value(std::int64_t p, Precision prec) {
  check_p(p);
  HPReal s(prec);
  for (std::int64_t j = 1; j < p; ++j) {
    int chi = ntheory::kronecker_symbol(j, p);
    if (chi == 0) continue;
    HPReal l = log(sin_pi(Rational(j, p), prec));
    if (chi > 0)
      s -= l;
    else
      s += l;
  }
  HPReal denom = log(unit_value(ntheory::pell_fundamental_unit(p), p, prec));
  denom *= 2;
  return s / denom;
}

std::int64_t dirichlet_class_number(std::int64_t p, Precision prec) {
  HPReal v = dirichlet_class_value(p, prec);
  long h = v.round_to_long();
  if (abs(v - h) >= HPReal::parse("1e-8", prec))
    throw ConsistencyError("class number value for p=" + std::to_string(p) +
                           " is not within 1e-8 of an integer: " + v.to_decimal(20));
  if (h < 1) throw ConsistencyError("class number below 1 for p=" + std::to_string(p));
  return h;
}

std::vector<bool> quadratic_residues(std::int64_t p) {
  std::vector<bool> res(p, false);
  for (std::int64_t x = 1; x < p; ++x) res[x * x % p] = true;
  return res;
}

HPReal residue_sine_ratio(std::int64_t p, Precision prec) {
  check_p(p);
  std::vector<bool> res = quadratic_residues(p);
  HPReal num(1, prec), den(1, prec);
  for (std::int64_t j = 1; 2 * j < p; ++j) {
    if (res[j])
      den *= sin_pi(Rational(j, p), prec);
    else
      num *= sin_pi(Rational(j, p), prec);
  }
  return num / den;
}

QuadFieldData quadfield_data(std::int64_t p, Precision prec) {
  check_p(p);
  return QuadFieldData{p, ntheory::pell_fundamental_unit(p), dirichlet_class_number(p, prec)};
}

}  // namespace trigsum::quadfield
