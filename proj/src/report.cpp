#include "bellctx/report.hpp"

#include <cmath>
#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bellctx/errors.hpp"

namespace bellctx {

namespace {

constexpr const char* kScanHeader =
    "c,s_min_closed,s_min_oracle,beta_closed,beta_oracle,regime,oracle_status";

double parse_double(const std::string& field, const std::string& what) {
  if (field == "nan") return std::nan("");
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("cannot parse " + what + " from '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

double round_to_precision(double value, int precision) {
  if (!std::isfinite(value)) return value;
  return parse_double(format_number(value, precision), "rounded value");
}

}  // namespace

std::string format_number(double value, int precision) {
  if (std::isnan(value)) return "nan";
  std::ostringstream os;
  os.precision(precision);
  os << value;
  return os.str();
}

void write_scan_csv(std::ostream& out, const std::vector<CorrelationPoint>& points,
                    int precision) {
  out << kScanHeader << "\n";
  for (const CorrelationPoint& p : points) {
    out << format_number(p.concurrence, precision) << ','
        << format_number(p.s_min_closed, precision) << ','
        << format_number(p.s_min_oracle, precision) << ','
        << format_number(p.beta_closed, precision) << ','
        << format_number(p.beta_oracle, precision) << ',' << regime_name(p.regime)
        << ',' << (p.oracle_status == OracleStatus::Ok ? "ok" : "failed") << "\n";
  }
}

std::string scan_to_csv(const std::vector<CorrelationPoint>& points, int precision) {
  std::ostringstream os;
  write_scan_csv(os, points, precision);
  return os.str();
}

std::vector<CorrelationPoint> parse_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV input");
  if (split_csv_line(line) != split_csv_line(kScanHeader)) {
    throw ParseError("unexpected CSV header: " + line);
  }
  std::vector<CorrelationPoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 7) {
      throw ParseError("expected 7 CSV fields, got " + std::to_string(fields.size()));
    }
    CorrelationPoint p;
    p.concurrence = parse_double(fields[0], "c");
    p.s_min_closed = parse_double(fields[1], "s_min_closed");
    p.s_min_oracle = parse_double(fields[2], "s_min_oracle");
    p.beta_closed = parse_double(fields[3], "beta_closed");
    p.beta_oracle = parse_double(fields[4], "beta_oracle");
    p.regime = regime_from_name(fields[5]);
    if (fields[6] == "ok") {
      p.oracle_status = OracleStatus::Ok;
    } else if (fields[6] == "failed") {
      p.oracle_status = OracleStatus::Failed;
    } else {
      throw ParseError("unexpected oracle_status '" + fields[6] + "'");
    }
    points.push_back(p);
  }
  return points;
}

std::vector<CorrelationPoint> parse_scan_csv(const std::string& text) {
  std::istringstream is(text);
  return parse_scan_csv(is);
}

std::string scan_to_json(const std::vector<CorrelationPoint>& points, int precision) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CorrelationPoint& p : points) {
    nlohmann::json rec;
    rec["c"] = round_to_precision(p.concurrence, precision);
    rec["s_min_closed"] = round_to_precision(p.s_min_closed, precision);
    rec["s_min_oracle"] = round_to_precision(p.s_min_oracle, precision);
    rec["beta_closed"] = round_to_precision(p.beta_closed, precision);
    rec["beta_oracle"] = round_to_precision(p.beta_oracle, precision);
    rec["regime"] = std::string(regime_name(p.regime));
    rec["oracle_status"] = p.oracle_status == OracleStatus::Ok ? "ok" : "failed";
    arr.push_back(std::move(rec));
  }
  return arr.dump(2);
}

}  // namespace bellctx
