#pragma once

#include "bellctx/linalg.hpp"

namespace bellctx {

// Swap-invariant two-qubit state a|00> + b/sqrt(2)(|01> + |10>) + c|11>,
// stored as its normalized amplitude triple (a, b, c).
class SymmetricTwoQubit {
 public:
  SymmetricTwoQubit(cplx a, cplx b, cplx c,
                    const Tolerances& tol = default_tolerances());

  static SymmetricTwoQubit normalized(cplx a, cplx b, cplx c);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }

 private:
  cplx a_, b_, c_;
};

// Spin-1 state over the ordered basis (|1>, |0>, |-1>), i.e. m = +1, 0, -1.
class QutritPure {
 public:
  explicit QutritPure(PureState state);

  const PureState& state() const { return state_; }
  cplx amplitude(int i) const { return state_.amplitude(i); }

 private:
  PureState state_;
};

// (a, b, c) -> (a, b/sqrt(2), b/sqrt(2), c) over |00>, |01>, |10>, |11>.
PureState embed(const SymmetricTwoQubit& s);

// Componentwise reinterpretation of the triple over (|1>, |0>, |-1>).
QutritPure to_qutrit(const SymmetricTwoQubit& s);

// Inverse of embed. Rejects states whose antisymmetric component
// |amp(01) - amp(10)| / sqrt(2) exceeds `tol`; the returned triple is
// renormalized.
SymmetricTwoQubit project_symmetric(const PureState& state, double tol = 1e-9);

}  // namespace bellctx
