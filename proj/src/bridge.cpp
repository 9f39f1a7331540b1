#include "bellctx/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellctx/chsh.hpp"
#include "bellctx/kcbs.hpp"
#include "bellctx/symmetric.hpp"

namespace bellctx {

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::LocalNoncontextual:
      return "LOCAL_NONCONTEXTUAL";
    case Regime::NonlocalNoncontextual:
      return "NONLOCAL_NONCONTEXTUAL";
    case Regime::NonlocalContextual:
      return "NONLOCAL_CONTEXTUAL";
  }
  throw OutOfRange("unknown regime");
}

Regime regime_from_name(std::string_view name) {
  if (name == "LOCAL_NONCONTEXTUAL") return Regime::LocalNoncontextual;
  if (name == "NONLOCAL_NONCONTEXTUAL") return Regime::NonlocalNoncontextual;
  if (name == "NONLOCAL_CONTEXTUAL") return Regime::NonlocalContextual;
  throw ParseError("unknown regime name: " + std::string(name));
}

namespace {
// Interval slack for the closed-form inversions: optimizer output sits a few
// ulp outside the exact endpoints.
constexpr double kEndpointSlack = 1e-9;
}  // namespace

double c_from_smin(double s) {
  const double lo = kcbs_quantum_min();
  const double hi = -std::sqrt(5.0);
  if (s < lo - kEndpointSlack || s > hi + kEndpointSlack) {
    throw OutOfRange("s = " + std::to_string(s) + " outside [5 - 4 sqrt(5), -sqrt(5)]");
  }
  const double c = (s + std::sqrt(5.0)) / (5.0 - 3.0 * std::sqrt(5.0));
  return std::clamp(c, 0.0, 1.0);
}

double c_from_beta(double beta) {
  if (beta < 2.0 - kEndpointSlack || beta > tsirelson_bound() + kEndpointSlack) {
    throw OutOfRange("beta = " + std::to_string(beta) + " outside [2, 2 sqrt(2)]");
  }
  const double arg = beta * beta / 4.0 - 1.0;
  return std::clamp(std::sqrt(std::max(0.0, arg)), 0.0, 1.0);
}

double smin_from_beta(double beta) { return s_min_closed_form(c_from_beta(beta)); }

Regime classify(double beta, double input_slack) {
  const Thresholds& th = thresholds();
  if (beta < 0.0 || beta > th.beta_tsirelson + input_slack) {
    throw OutOfRange("beta = " + std::to_string(beta) +
                     " outside [0, 2 sqrt(2) = 2.828427]");
  }
  if (beta <= th.beta_local) return Regime::LocalNoncontextual;
  if (beta <= th.beta_noncontextual) return Regime::NonlocalNoncontextual;
  return Regime::NonlocalContextual;
}

std::vector<CorrelationPoint> scan(double c_min, double c_max, int steps,
                                   const OptimizerParams& params) {
  if (!(c_min >= 0.0 && c_min <= c_max && c_max <= 1.0)) {
    throw OutOfRange("scan range must satisfy 0 <= c_min <= c_max <= 1");
  }
  if (steps < 1) throw OutOfRange("scan needs at least one grid point");

  std::vector<CorrelationPoint> points;
  points.reserve(static_cast<size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double c = (steps == 1)
                         ? c_min
                         : c_min + (c_max - c_min) * static_cast<double>(k) /
                               static_cast<double>(steps - 1);
    CorrelationPoint p;
    p.concurrence = c;
    p.s_min_closed = s_min_closed_form(c);
    p.beta_closed = beta_closed_form(c);
    p.regime = classify(p.beta_closed);
    try {
      const KcbsMinResult min = kcbs_min_for_concurrence(c, params);
      p.s_min_oracle = min.value;
      const SymmetricTwoQubit sym(min.argmin.amplitude(0), min.argmin.amplitude(1),
                                  min.argmin.amplitude(2));
      p.beta_oracle = chsh_max_correlation(embed(sym));
      if (p.s_min_oracle < p.s_min_closed - 1e-3) {
        p.note = "oracle found a KCBS value below the closed form";
      }
    } catch (const Error& e) {
      p.oracle_status = OracleStatus::Failed;
      p.s_min_oracle = std::nan("");
      p.beta_oracle = std::nan("");
      p.note = e.what();
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace bellctx
