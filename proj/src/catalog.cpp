#include "trigsum/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "catalog_internal.hpp"
#include "trigsum/errors.hpp"

namespace trigsum::catalog {

const char* to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Rational:
      return "rational";
    case ValueKind::Real:
      return "real";
    case ValueKind::ComplexReal:
      return "complex-real";
    case ValueKind::Complex:
      return "complex";
  }
  return "?";
}

std::int64_t ParamSet::operator[](std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  throw DomainError("no parameter named '" + std::string(name) + "'");
}

std::string ParamSet::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ' ';
    os << names[i] << '=' << values[i];
  }
  if (!pairs.empty()) {
    if (!names.empty()) os << ' ';
    os << "pairs=";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i) os << ',';
      os << pairs[i].first << ':' << pairs[i].second;
    }
  }
  return os.str();
}

bool operator<(const ParamSet& a, const ParamSet& b) {
  if (a.values != b.values) return a.values < b.values;
  return a.pairs < b.pairs;
}

const std::vector<IdentityDescriptor>& list_identities() {
  static const std::vector<IdentityDescriptor> all = [] {
    std::vector<IdentityDescriptor> v;
    detail::add_classic(v);
    detail::add_cotangent(v);
    detail::add_modified(v);
    // numeric order, with I38-I40 after I37
    std::stable_partition(v.begin(), v.end(), [](const IdentityDescriptor& d) {
      return d.id != "I38" && d.id != "I39" && d.id != "I40";
    });
    return v;
  }();
  return all;
}

const IdentityDescriptor& find_identity(std::string_view id) {
  for (const auto& d : list_identities())
    if (d.id == id) return d;
  throw DomainError("unknown identity '" + std::string(id) + "'");
}

ParamSet validate_params(std::string_view id, const RawParams& raw) {
  const IdentityDescriptor& d = find_identity(id);
  for (const auto& [name, value] : raw.values) {
    (void)value;
    if (std::find(d.params.begin(), d.params.end(), name) == d.params.end())
      throw DomainError(d.id + ": unknown parameter '" + name + "'");
  }
  ParamSet ps;
  ps.names = d.params;
  for (const auto& name : d.params) {
    auto it = raw.values.find(name);
    if (it == raw.values.end()) throw DomainError(d.id + ": missing parameter '" + name + "'");
    ps.values.push_back(it->second);
  }
  if (d.takes_pairs) {
    if (!raw.pairs) throw DomainError(d.id + ": a pair list is required");
    ps.pairs = *raw.pairs;
  } else if (raw.pairs) {
    throw DomainError(d.id + ": does not take a pair list");
  }
  if (const char* why = d.constraint(ps)) throw DomainError(d.id + ": " + why);
  return ps;
}

Evaluation eval_direct(std::string_view id, const ParamSet& params, Precision p) {
  return find_identity(id).direct(params, p);
}

Evaluation eval_closed(std::string_view id, const ParamSet& params, Precision p) {
  return find_identity(id).closed(params, p);
}

IdentityReport verify(std::string_view id, const ParamSet& params, Precision p,
                      const VerifyOptions& opt) {
  const IdentityDescriptor& d = find_identity(id);
  Evaluation lhs = d.direct(params, p);
  Evaluation rhs = d.closed(params, p);
  IdentityReport r;
  r.id = d.id;
  r.params = params;
  r.terms = lhs.terms + rhs.terms;
  if (lhs.exact && rhs.exact) {
    r.exact_residual = *lhs.exact - *rhs.exact;
    r.abs_err = HPReal(abs(*r.exact_residual), p);
  } else {
    r.abs_err = abs(lhs.re - rhs.re);
  }
  r.imag_leak = abs(lhs.im - rhs.im);
  r.tol = opt.tol ? *opt.tol : tau(std::max<std::size_t>(r.terms, 1), p);
  r.lhs = std::move(lhs.re);
  r.rhs = std::move(rhs.re);
  r.pass = r.abs_err <= r.tol && r.imag_leak <= r.tol;
  return r;
}

namespace {

void enumerate(const IdentityDescriptor& d, std::int64_t bound, Prefix& prefix,
               std::vector<ParamSet>& out) {
  std::size_t depth = prefix.size();
  if (depth == d.axes.size()) {
    ParamSet ps;
    ps.names = d.params;
    ps.values = prefix;
    if (d.constraint(ps) == nullptr) out.push_back(std::move(ps));
    return;
  }
  const Axis& ax = d.axes[depth];
  std::int64_t lo = ax.lo(prefix, bound);
  std::int64_t hi = std::min(ax.hi(prefix, bound), bound);
  for (std::int64_t v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    if (!ax.keep || ax.keep(prefix)) enumerate(d, bound, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ParamSet> grid(std::string_view id, std::int64_t bound) {
  const IdentityDescriptor& d = find_identity(id);
  std::vector<ParamSet> out;
  if (d.axes.empty()) return out;
  Prefix prefix;
  enumerate(d, bound, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Evaluation variant_closed(std::string_view id, const ParamSet& params, Precision p) {
  return detail::variant_closed_modified(id, params, p);
}

}  // namespace trigsum::catalog
