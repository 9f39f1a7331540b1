#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "bellctx/optimize.hpp"

namespace bellctx {

// Classification of a state by its maximal CHSH expectation beta:
//   beta <= 2                      local, non-contextual
//   2 < beta <= sqrt(24/5)         non-local but still non-contextual
//   sqrt(24/5) < beta <= 2 sqrt(2) non-local and contextual
// Each band is upper-inclusive.
enum class Regime {
  LocalNoncontextual = 0,
  NonlocalNoncontextual = 1,
  NonlocalContextual = 2,
};

std::string_view regime_name(Regime r);
Regime regime_from_name(std::string_view name);

// The constants that tie the two scenarios together. c_star is the smallest
// concurrence whose KCBS minimum reaches the classical bound -3; feeding it
// into the CHSH law yields the non-contextuality bound sqrt(24/5).
struct Thresholds {
  double beta_local = 2.0;
  double beta_noncontextual = std::sqrt(24.0 / 5.0);  // ~2.190890
  double beta_tsirelson = 2.0 * std::sqrt(2.0);       // ~2.828427
  double s_noncontextual = -3.0;
  double c_star = 1.0 / std::sqrt(5.0);  // ~0.447214
};

inline const Thresholds& thresholds() {
  static const Thresholds t{};
  return t;
}

// Inverse of the KCBS law: concurrence whose minimum KCBS value is s.
// Valid for 5 - 4 sqrt(5) <= s <= -sqrt(5).
double c_from_smin(double s);

// Inverse of the CHSH law: concurrence reaching beta. Valid for
// 2 <= beta <= 2 sqrt(2).
double c_from_beta(double beta);

// KCBS minimum of the concurrence class that attains `beta` in the CHSH test.
double smin_from_beta(double beta);

// Regime of a CHSH expectation value. `input_slack` loosens only the upper
// end so that values rounded to a few digits (e.g. 2.82843) stay in range.
Regime classify(double beta, double input_slack = 1e-5);

enum class OracleStatus { Ok, Failed };

// One row of a concurrence scan: closed-form laws side by side with the
// independent optimization oracles. Oracle failures mark the row instead of
// aborting the scan.
struct CorrelationPoint {
  double concurrence = 0.0;
  double s_min_closed = 0.0;
  double s_min_oracle = 0.0;
  double beta_closed = 0.0;
  double beta_oracle = 0.0;
  Regime regime = Regime::LocalNoncontextual;
  OracleStatus oracle_status = OracleStatus::Ok;
  std::string note;  // failure reason or flagged discrepancy
};

// Uniform concurrence grid with `steps` points, both endpoints included
// (steps == 1 evaluates c_min alone). Each point runs the KCBS minimizer,
// embeds its argmin and evaluates the CHSH maximum of that state.
std::vector<CorrelationPoint> scan(double c_min, double c_max, int steps,
                                   const OptimizerParams& params = {});

}  // namespace bellctx
