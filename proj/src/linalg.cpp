#include "bellctx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bellctx {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw DimensionMismatch("matrix dimension must be between 1 and 4, got " +
                            std::to_string(dim));
  }
}

}  // namespace

CMat::CMat(int dim) : dim_(dim) { check_dim(dim); }

CMat::CMat(int dim, std::initializer_list<cplx> entries) : dim_(dim) {
  check_dim(dim);
  if (static_cast<int>(entries.size()) != dim * dim) {
    throw DimensionMismatch("entry list does not match matrix dimension");
  }
  std::copy(entries.begin(), entries.end(), a_.begin());
}

CMat CMat::identity(int dim) {
  CMat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::adjoint() const {
  CMat r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

cplx CMat::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) s += std::norm(a_[i]);
  return std::sqrt(s);
}

double CMat::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

void CMat::apply(std::span<const cplx> in, std::span<cplx> out) const {
  if (static_cast<int>(in.size()) != dim_ || static_cast<int>(out.size()) != dim_) {
    throw DimensionMismatch("vector length does not match matrix dimension");
  }
  for (int i = 0; i < dim_; ++i) {
    cplx acc = 0.0;
    for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * in[j];
    out[i] = acc;
  }
}

CMat operator+(const CMat& a, const CMat& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix dimensions differ");
  CMat r(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

CMat operator-(const CMat& a, const CMat& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix dimensions differ");
  CMat r(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix dimensions differ");
  const int n = a.dim_;
  CMat r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

CMat operator*(cplx s, const CMat& a) {
  CMat r(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) r.a_[i] = s * a.a_[i];
  return r;
}

CMat kron(const CMat& a, const CMat& b) {
  const int da = a.dim();
  const int db = b.dim();
  if (da * db > kMaxDim) {
    throw DimensionMismatch("Kronecker product exceeds the supported dimension 4");
  }
  CMat r(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l)
          r(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return r;
}

PureState PureState::from_amplitudes(std::span<const cplx> amps, const Tolerances& tol) {
  const int dim = static_cast<int>(amps.size());
  if (dim < 2 || dim > kMaxDim) {
    throw DimensionMismatch("state dimension must be 2, 3 or 4, got " +
                            std::to_string(dim));
  }
  double n2 = 0.0;
  for (const cplx& a : amps) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 2.0 * tol.unit_norm) {
    throw NotNormalized("state norm deviates from 1 by more than tolerance");
  }
  PureState s(dim);
  std::copy(amps.begin(), amps.end(), s.a_.begin());
  return s;
}

PureState PureState::from_amplitudes(std::initializer_list<cplx> amps, const Tolerances& tol) {
  return from_amplitudes(std::span<const cplx>(amps.begin(), amps.size()), tol);
}

PureState PureState::normalized(std::span<const cplx> amps) {
  const int dim = static_cast<int>(amps.size());
  if (dim < 2 || dim > kMaxDim) {
    throw DimensionMismatch("state dimension must be 2, 3 or 4, got " +
                            std::to_string(dim));
  }
  double n2 = 0.0;
  for (const cplx& a : amps) n2 += std::norm(a);
  const double n = std::sqrt(n2);
  if (n < 1e-300) throw ZeroVector("cannot normalize a zero state vector");
  PureState s(dim);
  for (int i = 0; i < dim; ++i) s.a_[i] = amps[i] / n;
  return s;
}

PureState PureState::normalized(std::initializer_list<cplx> amps) {
  return normalized(std::span<const cplx>(amps.begin(), amps.size()));
}

double PureState::norm() const {
  double n2 = 0.0;
  for (int i = 0; i < dim_; ++i) n2 += std::norm(a_[i]);
  return std::sqrt(n2);
}

cplx PureState::inner(const PureState& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("state dimensions differ");
  cplx acc = 0.0;
  for (int i = 0; i < dim_; ++i) acc += std::conj(a_[i]) * other.a_[i];
  return acc;
}

HermitianObservable::HermitianObservable(CMat m, const Tolerances& tol) : m_(std::move(m)) {
  if (m_.dim() == 0) throw DimensionMismatch("empty matrix");
  if (m_.hermiticity_defect() > tol.hermiticity) {
    throw NotHermitian("matrix is not Hermitian within tolerance");
  }
}

HermitianObservable identity_observable(int dim) {
  return HermitianObservable(CMat::identity(dim));
}

HermitianObservable pauli_x() {
  return HermitianObservable(CMat(2, {0.0, 1.0, 1.0, 0.0}));
}

HermitianObservable pauli_y() {
  return HermitianObservable(CMat(2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}));
}

HermitianObservable pauli_z() {
  return HermitianObservable(CMat(2, {1.0, 0.0, 0.0, -1.0}));
}

double expectation(const PureState& state, const HermitianObservable& obs,
                   const Tolerances& tol) {
  if (state.dim() != obs.dim()) {
    throw DimensionMismatch("state and observable dimensions differ");
  }
  std::array<cplx, kMaxDim> tmp{};
  obs.matrix().apply(state.amplitudes(), std::span<cplx>(tmp.data(), state.dim()));
  cplx q = 0.0;
  for (int i = 0; i < state.dim(); ++i) q += std::conj(state.amplitude(i)) * tmp[i];
  if (std::abs(q.imag()) > tol.expectation_imag) {
    throw NumericalError("expectation value has a non-negligible imaginary part");
  }
  return q.real();
}

HermitianObservable tensor(const HermitianObservable& a, const HermitianObservable& b) {
  return HermitianObservable(kron(a.matrix(), b.matrix()));
}

double commutator_norm(const HermitianObservable& a, const HermitianObservable& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("observable dimensions differ");
  return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).frobenius_norm();
}

namespace {

// One cyclic Jacobi pass over the strict upper triangle. Rotations are the
// complex Givens form J_pp = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi},
// J_qq = c with phi = arg(A_pq), which zeroes A_pq exactly.
void jacobi_diagonalize(CMat& a, CMat& v, const Tolerances& tol) {
  const int n = a.dim();
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) < tol.jacobi_offdiag) return;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cplx phase = apq / r;  // e^{i phi}
        const double d = a(q, q).real() - a(p, p).real();
        double t;
        if (d == 0.0) {
          t = 1.0;
        } else {
          const double cot2 = d / (2.0 * r);
          t = 1.0 / (std::abs(cot2) + std::sqrt(cot2 * cot2 + 1.0));
          if (cot2 < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const cplx s = t * c * phase;  // s e^{i phi}

        // A <- J^H A J, applied as column then row updates.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  // Fell out of the sweep loop; the caller's reconstruction check decides
  // whether the residual is acceptable.
}

}  // namespace

EigenSystem eigensystem(const HermitianObservable& obs, const Tolerances& tol) {
  const int n = obs.dim();
  CMat a = obs.matrix();
  CMat v = CMat::identity(n);
  jacobi_diagonalize(a, v, tol);

  std::array<int, kMaxDim> order{};
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.begin() + n,
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  std::vector<double> eigenvalues(n);
  for (int i = 0; i < n; ++i) eigenvalues[i] = a(order[i], order[i]).real();

  std::vector<EigenGroup> groups;
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && eigenvalues[stop] - eigenvalues[stop - 1] < tol.degeneracy_gap) ++stop;
    EigenGroup g;
    g.multiplicity = stop - start;
    g.projector = CMat(n);
    double mean = 0.0;
    for (int k = start; k < stop; ++k) {
      mean += eigenvalues[k];
      const int col = order[k];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          g.projector(i, j) += v(i, col) * std::conj(v(j, col));
    }
    g.value = mean / g.multiplicity;
    groups.push_back(std::move(g));
    start = stop;
  }

  // Structural checks: completeness, idempotence, orthogonality, and the
  // spectral reconstruction of the input.
  CMat sum(n);
  CMat rebuilt(n);
  for (const EigenGroup& g : groups) {
    sum = sum + g.projector;
    rebuilt = rebuilt + cplx(g.value) * g.projector;
    if ((g.projector * g.projector - g.projector).frobenius_norm() > tol.projector) {
      throw NumericalError("eigenprojector is not idempotent within tolerance");
    }
  }
  if ((sum - CMat::identity(n)).frobenius_norm() > tol.projector) {
    throw NumericalError("eigenprojectors do not resolve the identity");
  }
  for (size_t i = 0; i < groups.size(); ++i) {
    for (size_t j = i + 1; j < groups.size(); ++j) {
      if ((groups[i].projector * groups[j].projector).frobenius_norm() > tol.projector) {
        throw NumericalError("eigenprojectors are not mutually orthogonal");
      }
    }
  }
  if ((rebuilt - obs.matrix()).frobenius_norm() > tol.reconstruction) {
    throw NumericalError("eigendecomposition does not reconstruct the operator");
  }

  return EigenSystem(std::move(eigenvalues), std::move(groups));
}

PureState apply_unitary(const CMat& u, const PureState& state) {
  if (u.dim() != state.dim()) throw DimensionMismatch("unitary and state dimensions differ");
  std::array<cplx, kMaxDim> out{};
  u.apply(state.amplitudes(), std::span<cplx>(out.data(), state.dim()));
  return PureState::from_amplitudes(std::span<const cplx>(out.data(), state.dim()));
}

}  // namespace bellctx
