#include "bellctx/symmetric.hpp"

#include <cmath>

namespace bellctx {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

SymmetricTwoQubit::SymmetricTwoQubit(cplx a, cplx b, cplx c, const Tolerances& tol)
    : a_(a), b_(b), c_(c) {
  const double n2 = std::norm(a_) + std::norm(b_) + std::norm(c_);
  if (std::abs(n2 - 1.0) > 2.0 * tol.unit_norm) {
    throw NotNormalized("symmetric amplitude triple is not unit-norm");
  }
}

SymmetricTwoQubit SymmetricTwoQubit::normalized(cplx a, cplx b, cplx c) {
  const double n = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c));
  if (n < 1e-300) throw ZeroVector("cannot normalize a zero amplitude triple");
  return SymmetricTwoQubit(a / n, b / n, c / n);
}

QutritPure::QutritPure(PureState state) : state_(std::move(state)) {
  if (state_.dim() != 3) {
    throw DimensionMismatch("qutrit state must have dimension 3");
  }
}

PureState embed(const SymmetricTwoQubit& s) {
  const cplx mid = s.b() * kInvSqrt2;
  return PureState::from_amplitudes({s.a(), mid, mid, s.c()});
}

QutritPure to_qutrit(const SymmetricTwoQubit& s) {
  return QutritPure(PureState::from_amplitudes({s.a(), s.b(), s.c()}));
}

SymmetricTwoQubit project_symmetric(const PureState& state, double tol) {
  if (state.dim() != 4) {
    throw DimensionMismatch("project_symmetric needs a two-qubit (dim-4) state");
  }
  const cplx beta = state.amplitude(1);
  const cplx gamma = state.amplitude(2);
  const double antisym = std::abs(beta - gamma) * kInvSqrt2;
  if (antisym > tol) {
    throw NotSymmetric("antisymmetric component " + std::to_string(antisym) +
                       " exceeds tolerance");
  }
  const cplx a = state.amplitude(0);
  const cplx b = (beta + gamma) * kInvSqrt2;
  const cplx c = state.amplitude(3);
  return SymmetricTwoQubit::normalized(a, b, c);
}

}  // namespace bellctx
