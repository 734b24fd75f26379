#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trigsum/catalog.hpp"

namespace trigsum::report {

enum class Format { Text, Json, Csv };

// DomainError for anything but text, json, csv.
Format parse_format(const std::string& s);

// Numbers are written as decimal strings at full precision.
void write_reports(std::ostream& os, const std::vector<catalog::IdentityReport>& reports, Format f);
void write_report(std::ostream& os, const catalog::IdentityReport& r, Format f);

std::string params_text(const catalog::ParamSet& ps);

}  // namespace trigsum::report
