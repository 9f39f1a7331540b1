#pragma once

#include "bellctx/geometry.hpp"
#include "bellctx/linalg.hpp"
#include "bellctx/optimize.hpp"

namespace bellctx {

// Four Bloch measurement axes: (a, a') for the first qubit, (b, b') for the
// second.
struct ChshSettings {
  Direction3 alice_a;
  Direction3 alice_a_prime;
  Direction3 bob_b;
  Direction3 bob_b_prime;

  // z/x-plane settings that reach 2 sqrt(2) on (|00> + |11>)/sqrt(2).
  static ChshSettings canonical();
};

struct ChshResult {
  double beta = 0.0;
  ChshSettings settings;
};

// n . sigma: the dichotomic spin-1/2 observable along a Bloch axis.
HermitianObservable qubit_observable(const Direction3& n);

// (a.s)x(b.s + b'.s) + (a'.s)x(b.s - b'.s); Hermitian with spectrum symmetric
// about zero and operator norm at most 2 sqrt(2).
HermitianObservable chsh_operator(const ChshSettings& s);

// Expectation of chsh_operator(s) in `state`.
double chsh_value(const PureState& state, const ChshSettings& s);

// Maximum of chsh_value over all settings by multi-start Nelder-Mead on the
// eight spherical angles. Independent of the correlation-matrix fast path so
// the two can cross-check each other.
ChshResult chsh_max_direct(const PureState& state, const OptimizerParams& params = {});

// Closed-form maximum 2 sqrt(t1 + t2), with t1 >= t2 the two largest
// eigenvalues of T^T T and T_ij = <sigma_i x sigma_j>.
double chsh_max_correlation(const PureState& state);

// 2 sqrt(1 + C^2): the maximal CHSH expectation for a pure two-qubit state of
// concurrence C.
double beta_closed_form(double concurrence);

inline constexpr double chsh_local_bound() { return 2.0; }
// 2 sqrt(2)
double tsirelson_bound();

}  // namespace bellctx
