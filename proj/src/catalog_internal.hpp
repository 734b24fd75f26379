#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "trigsum/catalog.hpp"
#include "trigsum/hpreal.hpp"

namespace trigsum::catalog::detail {

inline Evaluation exact(const Rational& r, Precision p) {
  return Evaluation{HPReal(r, p), HPReal(p), r, 1};
}

inline Evaluation real(HPReal v, std::size_t terms) {
  Precision p = v.precision();
  return Evaluation{std::move(v), HPReal(p), std::nullopt, terms};
}

inline Evaluation cplx(HPComplex c, std::size_t terms) {
  return Evaluation{std::move(c.re), std::move(c.im), std::nullopt, terms};
}

inline bool coprime(std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; }

using Bound = std::function<std::int64_t(const Prefix&, std::int64_t)>;

inline Bound fixed(std::int64_t v) {
  return [v](const Prefix&, std::int64_t) { return v; };
}

inline Bound up_to_bound() {
  return [](const Prefix&, std::int64_t b) { return b; };
}

// name ranges over [lo, bound]
inline Axis axis(std::string name, std::int64_t lo, std::function<bool(const Prefix&)> keep = {}) {
  return Axis{std::move(name), fixed(lo), up_to_bound(), std::move(keep)};
}

inline Axis axis(std::string name, Bound lo, Bound hi, std::function<bool(const Prefix&)> keep = {}) {
  return Axis{std::move(name), std::move(lo), std::move(hi), std::move(keep)};
}

void add_classic(std::vector<IdentityDescriptor>& out);
void add_cotangent(std::vector<IdentityDescriptor>& out);
void add_modified(std::vector<IdentityDescriptor>& out);

Evaluation variant_closed_modified(std::string_view id, const ParamSet& ps, Precision p);

}  // namespace trigsum::catalog::detail
