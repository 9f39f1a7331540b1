#pragma once

namespace bellctx {

// Every numerical tolerance used by the library, in one place. Functions take
// a `const Tolerances&` defaulting to `default_tolerances()`; callers that
// need looser or tighter checks pass their own copy.
struct Tolerances {
  double unit_norm = 1e-12;         // state / direction normalization checks
  double hermiticity = 1e-12;       // max |a_ij - conj(a_ji)| allowed
  double expectation_imag = 1e-10;  // residual Im<psi|O|psi> allowed
  double projector = 1e-10;         // completeness / idempotence / orthogonality
  double reconstruction = 1e-9;     // ||sum_k l_k P_k - O||_F allowed
  double degeneracy_gap = 1e-9;     // eigenvalues closer than this share a projector
  double jacobi_offdiag = 1e-14;    // off-diagonal Frobenius norm stop threshold
  int jacobi_max_sweeps = 100;

  double norm_loose = 1e-9;      // looser norm pre-check (concurrence inputs)
  double symmetric_part = 1e-9;  // default antisymmetric-component rejection
  double commuting_pair = 1e-9;  // sampler joint-measurability pre-check

  // Regime classification accepts beta this far above the Tsirelson bound so
  // that values quoted at 6 significant digits (e.g. 2.82843) still classify.
  double classify_slack = 1e-5;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace bellctx
