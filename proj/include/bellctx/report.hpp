#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bellctx/bridge.hpp"

namespace bellctx {

// Formats with `precision` significant digits (general float format, so 6
// digits renders 2.1908902... as "2.19089").
std::string format_number(double value, int precision);

// CSV with the fixed header
// c,s_min_closed,s_min_oracle,beta_closed,beta_oracle,regime,oracle_status
void write_scan_csv(std::ostream& out, const std::vector<CorrelationPoint>& points,
                    int precision);
std::string scan_to_csv(const std::vector<CorrelationPoint>& points, int precision);

// Parses CSV produced by write_scan_csv (used by tests and downstream tools).
std::vector<CorrelationPoint> parse_scan_csv(std::istream& in);
std::vector<CorrelationPoint> parse_scan_csv(const std::string& text);

// JSON array of records with the same keys; numeric fields are rounded to the
// configured precision.
std::string scan_to_json(const std::vector<CorrelationPoint>& points, int precision);

}  // namespace bellctx
