#include "trigsum/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigsum/catalog.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/quadfield.hpp"
#include "trigsum/report_format.hpp"
#include "trigsum/rhcriterion.hpp"

namespace trigsum {

namespace {

using catalog::IdentityReport;
using catalog::ParamSet;
using catalog::RawParams;
using report::Format;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  long precision_bits = Precision::kDefaultBits;
  std::string tol;
  std::string format = "text";
  int jobs = 1;
  std::string out_path;

  Precision precision() const { return Precision(precision_bits); }
  catalog::VerifyOptions verify_options() const {
    catalog::VerifyOptions o;
    if (!tol.empty()) o.tol = HPReal::parse(tol, precision());
    o.jobs = jobs;
    return o;
  }
};

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError(what + ": '" + s + "' is not an integer");
  return v;
}

catalog::PairList parse_pairs(const std::string& s) {
  catalog::PairList pairs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw DomainError("pairs: expected a:b, got '" + item + "'");
    pairs.emplace_back(parse_int(item.substr(0, colon), "pairs"), parse_int(item.substr(colon + 1), "pairs"));
  }
  if (pairs.empty()) throw DomainError("pairs: empty list");
  return pairs;
}

RawParams parse_assignments(const std::vector<std::string>& args) {
  RawParams raw;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("expected name=value, got '" + a + "'");
    std::string name = a.substr(0, eq), value = a.substr(eq + 1);
    if (name == "pairs") {
      raw.pairs = parse_pairs(value);
    } else if (name == "sign" && (value == "minus" || value == "plus")) {
      raw.values[name] = value == "minus" ? -1 : 1;
    } else {
      raw.values[name] = parse_int(value, name);
    }
  }
  return raw;
}

struct IdSummary {
  std::string id;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::string note;
  HPReal max_err;
  HPReal max_leak;
};

// I16 has no grid of its own; it runs on every searched family.
std::vector<IdentityReport> pair_family_reports(std::int64_t bound, const RunConfig& cfg) {
  std::vector<ParamSet> sets;
  for (std::int64_t k = 5; k <= bound; k += 4) {
    for (auto& fam : catalog::search_pair_families(k)) {
      RawParams raw;
      raw.values["k"] = k;
      raw.pairs = fam;
      sets.push_back(catalog::validate_params("I16", raw));
    }
  }
  return catalog::verify_all("I16", sets, cfg.precision(), cfg.verify_options());
}

int cmd_verify(const std::string& which, std::int64_t bound, const RunConfig& cfg, std::ostream& out) {
  Format fmt = report::parse_format(cfg.format);
  if (bound < 1) throw DomainError("--bound must be positive");
  std::vector<std::string> ids;
  if (which == "all") {
    for (const auto& d : catalog::list_identities()) ids.push_back(d.id);
  } else {
    ids.push_back(catalog::find_identity(which).id);
  }

  std::vector<IdSummary> summary;
  std::vector<IdentityReport> all, failures;
  for (const auto& id : ids) {
    const auto& d = catalog::find_identity(id);
    IdSummary s{id, 0, 0, "", HPReal(cfg.precision()), HPReal(cfg.precision())};
    std::vector<IdentityReport> reports;
    if (d.takes_pairs) {
      reports = pair_family_reports(bound, cfg);
      s.note = "searched pair families, k = 1 (mod 4) up to the bound";
    } else {
      auto res = catalog::sweep(id, bound, cfg.precision(), cfg.verify_options());
      reports = std::move(res.reports);
      s.note = res.note;
    }
    for (auto& r : reports) {
      ++s.total;
      s.max_err = max(s.max_err, r.abs_err);
      s.max_leak = max(s.max_leak, r.imag_leak);
      if (r.pass)
        ++s.passed;
      else
        failures.push_back(r);
    }
    summary.push_back(s);
    if (fmt == Format::Csv) all.insert(all.end(), reports.begin(), reports.end());
  }

  std::size_t total = 0, passed = 0;
  for (const auto& s : summary) {
    total += s.total;
    passed += s.passed;
  }

  switch (fmt) {
    case Format::Text:
      for (const auto& s : summary) {
        out << std::left << std::setw(6) << s.id << (s.passed == s.total ? "ok   " : "FAIL ") << std::setw(14)
            << (std::to_string(s.passed) + '/' + std::to_string(s.total)) << "max err " << std::setw(12)
            << s.max_err.to_decimal(3) << " leak " << s.max_leak.to_decimal(3);
        if (!s.note.empty()) out << "  (" << s.note << ')';
        out << '\n';
      }
      report::write_reports(out, failures, fmt);
      out << "total " << passed << '/' << total << " passed, bound " << bound << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["bound"] = bound;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& s : summary)
        rows.push_back({{"id", s.id},
                        {"total", s.total},
                        {"passed", s.passed},
                        {"max_abs_err", s.max_err.to_decimal()},
                        {"max_imag_leak", s.max_leak.to_decimal()},
                        {"note", s.note}});
      j["identities"] = rows;
      std::ostringstream fs;
      report::write_reports(fs, failures, fmt);
      j["failures"] = nlohmann::ordered_json::parse(fs.str());
      j["pass"] = passed == total;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      report::write_reports(out, all, fmt);
      break;
  }
  return passed == total ? kOk : kFailed;
}

int cmd_eval(const std::string& id, const std::vector<std::string>& args, const RunConfig& cfg,
             std::ostream& out) {
  Format fmt = report::parse_format(cfg.format);
  ParamSet ps = catalog::validate_params(id, parse_assignments(args));
  IdentityReport r = catalog::verify(id, ps, cfg.precision(), cfg.verify_options());
  report::write_report(out, r, fmt);
  return r.pass ? kOk : kFailed;
}

std::string pairs_text(const catalog::PairList& fam) {
  std::string s = "[";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(fam[i].first) + "," + std::to_string(fam[i].second) + ")";
  }
  return s + "]";
}

int cmd_scan_pairs(std::int64_t k, const RunConfig& cfg, std::ostream& out) {
  Format fmt = report::parse_format(cfg.format);
  auto families = catalog::search_pair_families(k);
  std::vector<IdentityReport> reports;
  bool ok = true;
  for (const auto& fam : families) {
    RawParams raw;
    raw.values["k"] = k;
    raw.pairs = fam;
    ParamSet ps = catalog::validate_params("I16", raw);
    reports.push_back(catalog::verify("I16", ps, cfg.precision(), cfg.verify_options()));
    ok = ok && reports.back().pass && catalog::pair_family_covers(k, fam);
  }
  if (fmt == Format::Text) {
    out << families.size() << " families for k=" << k << '\n';
    for (std::size_t i = 0; i < families.size(); ++i)
      out << pairs_text(families[i]) << "  " << (reports[i].pass ? "PASS" : "FAIL") << "  sum = "
          << reports[i].lhs.to_decimal(30) << '\n';
  } else {
    report::write_reports(out, reports, fmt);
  }
  return ok ? kOk : kFailed;
}

std::string unit_text(const ntheory::PellUnit& u, std::int64_t p) {
  std::ostringstream os;
  std::string r = "*sqrt(" + std::to_string(p) + ")";
  if (u.half) {
    os << '(' << u.x.get_str() << '+' << u.y.get_str() << r << ")/2";
  } else {
    mpz_class x = u.x / 2, y = u.y / 2;
    os << x.get_str() << '+' << y.get_str() << r;
  }
  return os.str();
}

int cmd_quadfield(std::int64_t p, const RunConfig& cfg, std::ostream& out) {
  Format fmt = report::parse_format(cfg.format);
  Precision prec = cfg.precision();
  auto q = quadfield::quadfield_data(p, prec);
  std::vector<IdentityReport> reports;
  for (std::int64_t sign : {-1, 1}) {
    RawParams raw;
    raw.values["p"] = p;
    raw.values["sign"] = sign;
    reports.push_back(catalog::verify("I17", catalog::validate_params("I17", raw), prec, cfg.verify_options()));
  }
  bool ok = reports[0].pass && reports[1].pass;
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["epsilon"] = {{"x", q.epsilon.x.get_str()}, {"y", q.epsilon.y.get_str()}, {"half", q.epsilon.half},
                    {"norm", q.epsilon.norm}};
    j["epsilon_value"] = quadfield::unit_value(q.epsilon, p, prec).to_decimal();
    j["class_number"] = q.class_number;
    j["R_minus_inverse"] = reports[0].lhs.to_decimal();
    j["R_plus_inverse"] = reports[1].lhs.to_decimal();
    j["pass"] = ok;
    out << j.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    report::write_reports(out, reports, fmt);
  } else {
    out << "p            = " << p << '\n'
        << "epsilon      = " << unit_text(q.epsilon, p) << " (norm " << q.epsilon.norm << ")\n"
        << "             = " << quadfield::unit_value(q.epsilon, p, prec).to_decimal(40) << '\n'
        << "class number = " << q.class_number << '\n'
        << "R - 1/R      = " << reports[0].lhs.to_decimal(40) << "  " << (reports[0].pass ? "PASS" : "FAIL")
        << '\n'
        << "R + 1/R      = " << reports[1].lhs.to_decimal(40) << "  " << (reports[1].pass ? "PASS" : "FAIL")
        << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_rh(std::int64_t qmax, std::int64_t step, const std::string& mode_name, const RunConfig& cfg,
           std::ostream& out, std::ostream& fit_out) {
  if (qmax < 3) throw DomainError("--qmax must be at least 3");
  if (step < 1) throw DomainError("--step must be positive");
  rh::Mode mode;
  if (mode_name == "fast")
    mode = rh::Mode::Fast;
  else if (mode_name == "highprec")
    mode = rh::Mode::HighPrec;
  else
    throw DomainError("--mode must be fast or highprec");

  std::vector<std::int64_t> Qs;
  for (std::int64_t Q = step; Q < qmax; Q += step)
    if (Q >= 3) Qs.push_back(Q);
  Qs.push_back(qmax);

  auto rows = rh::rh_table(Qs, mode, cfg.precision(), cfg.jobs);
  rh::write_csv(out, rows, mode);

  HPReal limit = mode == rh::Mode::Fast ? HPReal::parse("1e-6", cfg.precision())
                                        : HPReal::parse("1e-50", cfg.precision());
  if (!cfg.tol.empty()) limit = HPReal::parse(cfg.tol, cfg.precision());
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.residual < limit;

  try {
    auto fit = rh::growth_fit(rows);
    fit_out << "growth fit: |W(Q)| ~ " << std::setprecision(6) << fit.C << " * Q^" << fit.alpha
            << "  (report only)\n";
  } catch (const DomainError& e) {
    fit_out << "growth fit: not available (" << e.what() << ")\n";
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite trigonometric sums: evaluation and identity verification", "trigsum"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--precision", cfg.precision_bits, "working precision in bits")
      ->check(CLI::Range(Precision::kMinBits, 1L << 20));
  app.add_option("--tol", cfg.tol, "tolerance override (decimal)");
  app.add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "write output to this file");

  std::string verify_id;
  std::int64_t bound = 20;
  auto* verify = app.add_subcommand("verify", "verify one identity or all over a parameter grid");
  verify->add_option("id", verify_id, "identity id or 'all'")->required();
  verify->add_option("--bound", bound, "largest parameter value");

  std::string eval_id;
  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one identity at name=value parameters");
  eval->add_option("id", eval_id, "identity id")->required();
  eval->add_option("params", eval_args, "name=value (pairs=a:b,..., sign=minus|plus)");

  std::int64_t scan_k = 0;
  auto* scan = app.add_subcommand("scan-pairs", "all pair families for k = 1 (mod 4), each verified");
  scan->add_option("k", scan_k)->required();

  std::int64_t quad_p = 0;
  auto* quad = app.add_subcommand("quadfield", "unit, class number and sine quotients of Q(sqrt p)");
  quad->add_option("p", quad_p)->required();

  std::int64_t qmax = 2000, step = 100;
  std::string mode = "fast";
  auto* rhc = app.add_subcommand("rh", "Farey character sine statistic table as CSV");
  rhc->add_option("--qmax", qmax);
  rhc->add_option("--step", step);
  rhc->add_option("--mode", mode)->check(CLI::IsMember({"fast", "highprec"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "trigsum: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "trigsum: cannot open " << cfg.out_path << '\n';
      return kUsage;
    }
    os = &file;
  }

  try {
    if (*verify) return cmd_verify(verify_id, bound, cfg, *os);
    if (*eval) return cmd_eval(eval_id, eval_args, cfg, *os);
    if (*scan) return cmd_scan_pairs(scan_k, cfg, *os);
    if (*quad) return cmd_quadfield(quad_p, cfg, *os);
    if (*rhc) return cmd_rh(qmax, step, mode, cfg, *os, cfg.out_path.empty() ? err : out);
  } catch (const DomainError& e) {
    err << "trigsum: " << e.what() << '\n';
    return kUsage;
  } catch (const SingularTerm& e) {
    err << "trigsum: singular term on validated parameters: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "trigsum: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace trigsum
