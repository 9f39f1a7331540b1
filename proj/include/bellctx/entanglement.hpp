#pragma once

#include "bellctx/linalg.hpp"

namespace bellctx {

// Degree of entanglement of a two-qubit pure state; 0 for product states,
// 1 for Bell states.
class Concurrence {
 public:
  explicit Concurrence(double value);

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

// C = 2|ad - bc| for amplitudes (a, b, c, d) over |00>, |01>, |10>, |11>.
Concurrence concurrence_pure(const PureState& state,
                             const Tolerances& tol = default_tolerances());

// C = |2ac - b^2| for the symmetric triple; equals concurrence_pure on the
// embedded state (a, b/sqrt(2), b/sqrt(2), c).
Concurrence concurrence_symmetric(cplx a, cplx b, cplx c,
                                  const Tolerances& tol = default_tolerances());

}  // namespace bellctx
