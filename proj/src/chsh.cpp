#include "bellctx/chsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bellctx/rng.hpp"

namespace bellctx {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_concurrence_arg(double c) {
  if (!(c >= -1e-12 && c <= 1.0 + 1e-12)) {
    throw InvalidConcurrence("concurrence " + std::to_string(c) + " outside [0, 1]");
  }
}

Direction3 from_angles(double theta, double phi) {
  return Direction3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                    std::cos(theta));
}

}  // namespace

ChshSettings ChshSettings::canonical() {
  return ChshSettings{Direction3(0, 0, 1), Direction3(1, 0, 0),
                      Direction3(kInvSqrt2, 0, kInvSqrt2),
                      Direction3(-kInvSqrt2, 0, kInvSqrt2)};
}

HermitianObservable qubit_observable(const Direction3& n) {
  const double n2 = n.x * n.x + n.y * n.y + n.z * n.z;
  if (std::abs(n2 - 1.0) > 2e-12) throw NotUnit("Bloch axis is not unit-norm");
  return HermitianObservable(CMat(2, {cplx(n.z), cplx(n.x, -n.y),
                                      cplx(n.x, n.y), cplx(-n.z)}));
}

HermitianObservable chsh_operator(const ChshSettings& s) {
  const CMat a = qubit_observable(s.alice_a).matrix();
  const CMat ap = qubit_observable(s.alice_a_prime).matrix();
  const CMat b = qubit_observable(s.bob_b).matrix();
  const CMat bp = qubit_observable(s.bob_b_prime).matrix();
  return HermitianObservable(kron(a, b + bp) + kron(ap, b - bp));
}

double chsh_value(const PureState& state, const ChshSettings& s) {
  if (state.dim() != 4) {
    throw DimensionMismatch("CHSH expects a two-qubit (dim-4) state");
  }
  return expectation(state, chsh_operator(s));
}

ChshResult chsh_max_direct(const PureState& state, const OptimizerParams& params) {
  if (state.dim() != 4) {
    throw DimensionMismatch("CHSH expects a two-qubit (dim-4) state");
  }

  const auto settings_from = [](std::span<const double> x) {
    return ChshSettings{from_angles(x[0], x[1]), from_angles(x[2], x[3]),
                        from_angles(x[4], x[5]), from_angles(x[6], x[7])};
  };
  const auto objective = [&](std::span<const double> x) {
    return -chsh_value(state, settings_from(x));
  };

  const std::array<double, 8> steps{0.6, 0.9, 0.6, 0.9, 0.6, 0.9, 0.6, 0.9};
  const std::array<double, 8> fine_steps{0.02, 0.03, 0.02, 0.03, 0.02, 0.03, 0.02, 0.03};
  // Start points keep theta away from the spherical-coordinate poles.
  const double theta_margin = 0.05;

  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  double best_before_last = std::numeric_limits<double>::infinity();

  for (int r = 0; r < params.restarts; ++r) {
    Xoshiro256 rng(derive_seed(params.seed ^ 0xC55ULL, static_cast<std::uint64_t>(r)));
    std::array<double, 8> x0{};
    for (int i = 0; i < 4; ++i) {
      x0[2 * i] = rng.uniform(theta_margin, std::numbers::pi - theta_margin);
      x0[2 * i + 1] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    NelderMeadResult nm =
        nelder_mead(objective, x0, steps, params.tolerance, (3 * params.max_evals) / 4);
    NelderMeadResult polished = nelder_mead(objective, nm.x, fine_steps, params.tolerance,
                                            params.max_evals - nm.evals);
    if (polished.f > nm.f) polished = nm;

    if (r == params.restarts - 1 && std::isfinite(best_f)) best_before_last = best_f;
    if (polished.f < best_f) {
      best_f = polished.f;
      best_x = polished.x;
    }
  }

  if (best_x.empty()) {
    throw ConvergenceFailure("CHSH optimization produced no candidate");
  }
  if (params.restarts > 1 && std::isfinite(best_before_last) &&
      best_before_last - best_f > 100.0 * params.tolerance) {
    throw ConvergenceFailure(
        "CHSH maximum still improved materially in the final restart; "
        "increase the restart budget");
  }

  const double beta = -best_f;
  if (std::abs(beta) > tsirelson_bound() + 1e-9) {
    throw NumericalError("CHSH value exceeds the Tsirelson bound");
  }
  return ChshResult{beta, settings_from(best_x)};
}

double chsh_max_correlation(const PureState& state) {
  if (state.dim() != 4) {
    throw DimensionMismatch("CHSH expects a two-qubit (dim-4) state");
  }
  const std::array<HermitianObservable, 3> sigma{pauli_x(), pauli_y(), pauli_z()};
  double t[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[i][j] = expectation(state, tensor(sigma[i], sigma[j]));

  // T^T T is symmetric positive semidefinite; its top two eigenvalues bound
  // the reachable CHSH value.
  CMat m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += t[k][i] * t[k][j];
      m(i, j) = acc;
    }
  const auto evals = eigensystem(HermitianObservable(m)).eigenvalues();
  return 2.0 * std::sqrt(std::max(0.0, evals[2] + evals[1]));
}

double beta_closed_form(double concurrence) {
  check_concurrence_arg(concurrence);
  return 2.0 * std::sqrt(1.0 + concurrence * concurrence);
}

double tsirelson_bound() { return 2.0 * std::sqrt(2.0); }

}  // namespace bellctx
