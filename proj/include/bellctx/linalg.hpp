#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "bellctx/errors.hpp"
#include "bellctx/tolerances.hpp"

namespace bellctx {

using cplx = std::complex<double>;

// Largest Hilbert-space dimension in play: two qubits. Fixed capacity keeps
// every state and observable allocation-free.
inline constexpr int kMaxDim = 4;

// Small dense complex matrix, row-major, dimension 1..4.
class CMat {
 public:
  CMat() = default;
  explicit CMat(int dim);
  CMat(int dim, std::initializer_list<cplx> entries);

  static CMat identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[i * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[i * dim_ + j]; }

  CMat adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;

  // y = M x for a raw amplitude vector.
  void apply(std::span<const cplx> in, std::span<cplx> out) const;

  friend CMat operator+(const CMat& a, const CMat& b);
  friend CMat operator-(const CMat& a, const CMat& b);
  friend CMat operator*(const CMat& a, const CMat& b);
  friend CMat operator*(cplx s, const CMat& a);

 private:
  int dim_ = 0;
  std::array<cplx, kMaxDim * kMaxDim> a_{};
};

// Kronecker product; result dimension must not exceed kMaxDim.
CMat kron(const CMat& a, const CMat& b);

// Unit-norm complex state vector of dimension 2, 3 or 4.
class PureState {
 public:
  // Checks the amplitudes are already unit-norm (throws NotNormalized).
  static PureState from_amplitudes(std::span<const cplx> amps,
                                   const Tolerances& tol = default_tolerances());
  static PureState from_amplitudes(std::initializer_list<cplx> amps,
                                   const Tolerances& tol = default_tolerances());

  // Scales arbitrary amplitudes to unit norm (throws ZeroVector if the norm
  // is below 1e-300). Idempotent on already-normalized input.
  static PureState normalized(std::span<const cplx> amps);
  static PureState normalized(std::initializer_list<cplx> amps);

  int dim() const { return dim_; }
  cplx amplitude(int i) const { return a_[i]; }
  std::span<const cplx> amplitudes() const { return {a_.data(), static_cast<size_t>(dim_)}; }

  double norm() const;
  // <this|other>
  cplx inner(const PureState& other) const;

 private:
  explicit PureState(int dim) : dim_(dim) {}

  int dim_ = 0;
  std::array<cplx, kMaxDim> a_{};
};

// Hermitian matrix wrapper; construction validates the Hermiticity defect.
class HermitianObservable {
 public:
  explicit HermitianObservable(CMat m, const Tolerances& tol = default_tolerances());

  int dim() const { return m_.dim(); }
  const CMat& matrix() const { return m_; }

 private:
  CMat m_;
};

HermitianObservable identity_observable(int dim);
HermitianObservable pauli_x();
HermitianObservable pauli_y();
HermitianObservable pauli_z();

// <psi|O|psi>. The imaginary residue of the quadratic form is checked against
// tol.expectation_imag and discarded.
double expectation(const PureState& state, const HermitianObservable& obs,
                   const Tolerances& tol = default_tolerances());

// Kronecker product of observables; Hermiticity is preserved exactly.
HermitianObservable tensor(const HermitianObservable& a, const HermitianObservable& b);

// Frobenius norm of AB - BA; zero iff the pair is jointly measurable.
double commutator_norm(const HermitianObservable& a, const HermitianObservable& b);

// One eigenspace: eigenvalues closer than tol.degeneracy_gap are merged into
// a single group so that projective measurement collapses onto the full
// eigenspace rather than an arbitrary eigenvector basis.
struct EigenGroup {
  double value = 0.0;
  int multiplicity = 0;
  CMat projector;
};

class EigenSystem {
 public:
  EigenSystem(std::vector<double> eigenvalues, std::vector<EigenGroup> groups)
      : eigenvalues_(std::move(eigenvalues)), groups_(std::move(groups)) {}

  // Full spectrum, ascending, with multiplicity (size == dim).
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  // Degenerate clusters merged; projectors resolve the identity.
  const std::vector<EigenGroup>& groups() const { return groups_; }

 private:
  std::vector<double> eigenvalues_;
  std::vector<EigenGroup> groups_;
};

// Cyclic Jacobi eigendecomposition for Hermitian matrices of dimension <= 4.
// Off-diagonal threshold and sweep cap come from `tol`; the result is checked
// for completeness, orthogonality and reconstruction before returning.
EigenSystem eigensystem(const HermitianObservable& obs,
                        const Tolerances& tol = default_tolerances());

// U|psi> where U must preserve the norm (unitary); used for rotation and
// local-unitary transforms.
PureState apply_unitary(const CMat& u, const PureState& state);

}  // namespace bellctx
