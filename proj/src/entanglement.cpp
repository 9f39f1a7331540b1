#include "bellctx/entanglement.hpp"

#include <cmath>
#include <string>

namespace bellctx {

Concurrence::Concurrence(double value) : value_(value) {
  if (value_ < 0.0) {
    if (value_ < -1e-12) {
      throw InvalidConcurrence("concurrence " + std::to_string(value_) +
                               " is negative beyond round-off");
    }
    value_ = 0.0;
  }
  if (value_ > 1.0) {
    if (value_ > 1.0 + 1e-9) {
      throw InvalidConcurrence("concurrence " + std::to_string(value_) + " exceeds 1");
    }
    value_ = 1.0;
  }
}

Concurrence concurrence_pure(const PureState& state, const Tolerances& tol) {
  if (state.dim() != 4) {
    throw DimensionMismatch("concurrence_pure needs a two-qubit (dim-4) state");
  }
  if (std::abs(state.norm() - 1.0) > tol.norm_loose) {
    throw NotNormalized("state norm deviates from 1");
  }
  const cplx a = state.amplitude(0);
  const cplx b = state.amplitude(1);
  const cplx c = state.amplitude(2);
  const cplx d = state.amplitude(3);
  return Concurrence(2.0 * std::abs(a * d - b * c));
}

Concurrence concurrence_symmetric(cplx a, cplx b, cplx c, const Tolerances& tol) {
  const double n2 = std::norm(a) + std::norm(b) + std::norm(c);
  if (std::abs(n2 - 1.0) > 2.0 * tol.norm_loose) {
    throw NotNormalized("symmetric triple is not unit-norm");
  }
  return Concurrence(std::abs(2.0 * a * c - b * b));
}

}  // namespace bellctx
