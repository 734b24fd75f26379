#include "trigsum/report_format.hpp"

#include <ostream>

#include "json.hpp"
#include "trigsum/errors.hpp"

namespace trigsum::report {

using catalog::IdentityReport;
using catalog::ParamSet;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError("unknown format '" + s + "' (text, json, csv)");
}

std::string params_text(const ParamSet& ps) { return ps.str(); }

namespace {

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < r.params.names.size(); ++i) params[r.params.names[i]] = r.params.values[i];
  if (!r.params.pairs.empty()) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (auto [a, b] : r.params.pairs) pairs.push_back({a, b});
    params["pairs"] = pairs;
  }
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = params;
  j["lhs"] = r.lhs.to_decimal();
  j["rhs"] = r.rhs.to_decimal();
  j["abs_err"] = r.exact_residual ? r.exact_residual->str() : r.abs_err.to_decimal();
  j["tol"] = r.tol.to_decimal();
  j["imag_leak"] = r.imag_leak.to_decimal();
  j["pass"] = r.pass;
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_header(std::ostream& os) { os << "id,params,lhs,rhs,abs_err,tol,imag_leak,pass\n"; }

void csv_row(std::ostream& os, const IdentityReport& r) {
  os << r.id << ',' << csv_quote(params_text(r.params)) << ',' << r.lhs.to_decimal() << ','
     << r.rhs.to_decimal() << ','
     << (r.exact_residual ? r.exact_residual->str() : r.abs_err.to_decimal()) << ','
     << r.tol.to_decimal() << ',' << r.imag_leak.to_decimal() << ',' << (r.pass ? "true" : "false")
     << '\n';
}

void text_block(std::ostream& os, const IdentityReport& r) {
  os << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << params_text(r.params) << '\n'
     << "  lhs       = " << r.lhs.to_decimal() << '\n'
     << "  rhs       = " << r.rhs.to_decimal() << '\n'
     << "  abs_err   = " << (r.exact_residual ? r.exact_residual->str() : r.abs_err.to_decimal(6)) << '\n'
     << "  tol       = " << r.tol.to_decimal(6) << '\n'
     << "  imag_leak = " << r.imag_leak.to_decimal(6) << '\n';
}

}  // namespace

void write_report(std::ostream& os, const IdentityReport& r, Format f) {
  switch (f) {
    case Format::Text:
      text_block(os, r);
      break;
    case Format::Json:
      os << to_json(r).dump(2) << '\n';
      break;
    case Format::Csv:
      csv_header(os);
      csv_row(os, r);
      break;
  }
}

void write_reports(std::ostream& os, const std::vector<IdentityReport>& reports, Format f) {
  switch (f) {
    case Format::Text:
      for (const auto& r : reports) text_block(os, r);
      break;
    case Format::Json: {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& r : reports) a.push_back(to_json(r));
      os << a.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      csv_header(os);
      for (const auto& r : reports) csv_row(os, r);
      break;
  }
}

}  // namespace trigsum::report
