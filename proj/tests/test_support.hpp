#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "bellctx/geometry.hpp"
#include "bellctx/kcbs.hpp"
#include "bellctx/linalg.hpp"
#include "bellctx/rng.hpp"
#include "bellctx/symmetric.hpp"

namespace testsupport {

using bellctx::cplx;
using bellctx::CMat;
using bellctx::Direction3;
using bellctx::PureState;
using bellctx::Xoshiro256;

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Independent scalar oracles. These deliberately avoid the library's matrix
// machinery so the two routes can disagree if one of them is wrong.
// ---------------------------------------------------------------------------

// The m = 0 eigenvector of S.n in the (|1>, |0>, |-1>) basis.
inline std::array<cplx, 3> spin_zero_eigvec(const Direction3& n) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return {cplx(-n.x, n.y) * inv_sqrt2, cplx(n.z, 0.0), cplx(n.x, n.y) * inv_sqrt2};
}

// |<n;0|psi>|^2 by direct scalar expansion.
inline double overlap_sq(const Direction3& n, const std::array<cplx, 3>& psi) {
  const auto v = spin_zero_eigvec(n);
  cplx acc = 0.0;
  for (int i = 0; i < 3; ++i) acc += std::conj(v[i]) * psi[i];
  return std::norm(acc);
}

// KCBS sum via A_i = 1 - 2|l_i;0><l_i;0| and exact adjacent orthogonality:
// sum_i <A_i A_{i+1}> = 5 - 4 sum_i q_i + 4 sum_i <P_i P_{i+1}> with the cross
// terms vanishing for an orthogonal pentagram.
inline double kcbs_value_oracle(const std::array<Direction3, 5>& dirs,
                                const std::array<cplx, 3>& psi) {
  double q = 0.0;
  for (const Direction3& d : dirs) q += overlap_sq(d, psi);
  return 5.0 - 4.0 * q;
}

// Kronecker product by the index formula: out[2i+k][2j+l] = a[i][j] b[k][l].
inline std::array<std::array<cplx, 4>, 4> kron2x2_oracle(
    const std::array<std::array<cplx, 2>, 2>& a,
    const std::array<std::array<cplx, 2>, 2>& b) {
  std::array<std::array<cplx, 4>, 4> out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

// Characteristic polynomial of a 3x3 Hermitian via traces and determinant:
// p(x) = x^3 - tr x^2 + ((tr^2 - tr(A^2))/2) x - det.
struct CharPoly3 {
  double c2, c1, c0;  // x^3 + c2 x^2 + c1 x + c0
  double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
};

inline CharPoly3 char_poly3(const CMat& m) {
  const double tr = m.trace().real();
  double tr2 = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) tr2 += (m(i, k) * m(k, i)).real();
  const cplx det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return CharPoly3{-tr, 0.5 * (tr * tr - tr2), -det.real()};
}

// ---------------------------------------------------------------------------
// Deterministic random generators for property tests.
// ---------------------------------------------------------------------------

inline cplx random_cplx(Xoshiro256& rng) { return cplx(rng.normal(), rng.normal()); }

inline PureState random_state(int dim, Xoshiro256& rng) {
  std::vector<cplx> amps(static_cast<size_t>(dim));
  for (cplx& a : amps) a = random_cplx(rng);
  return PureState::normalized(amps);
}

inline std::array<cplx, 3> random_triple(Xoshiro256& rng) {
  std::array<cplx, 3> t{random_cplx(rng), random_cplx(rng), random_cplx(rng)};
  double n = 0.0;
  for (const cplx& x : t) n += std::norm(x);
  n = std::sqrt(n);
  for (cplx& x : t) x /= n;
  return t;
}

inline Direction3 random_direction(Xoshiro256& rng) {
  double x, y, z, n2;
  do {
    x = rng.normal();
    y = rng.normal();
    z = rng.normal();
    n2 = x * x + y * y + z * z;
  } while (n2 < 1e-6);
  const double n = std::sqrt(n2);
  return Direction3(x / n, y / n, z / n);
}

// Haar-ish random SU(2) from Euler angles.
inline CMat random_su2(Xoshiro256& rng) {
  const double alpha = rng.uniform(0.0, 2.0 * kPi);
  const double theta = rng.uniform(0.0, kPi);
  const double gamma = rng.uniform(0.0, 2.0 * kPi);
  const cplx eia = std::polar(1.0, -0.5 * alpha);
  const cplx eig = std::polar(1.0, -0.5 * gamma);
  CMat rz1(2, {eia, 0.0, 0.0, std::conj(eia)});
  CMat ry(2, {cplx(std::cos(theta / 2)), cplx(-std::sin(theta / 2)),
              cplx(std::sin(theta / 2)), cplx(std::cos(theta / 2))});
  CMat rz2(2, {eig, 0.0, 0.0, std::conj(eig)});
  return rz1 * ry * rz2;
}

// ---------------------------------------------------------------------------
// Rotations for covariance tests.
// ---------------------------------------------------------------------------

// Rodrigues rotation of v by angle about a unit axis.
inline Direction3 rotate(const Direction3& axis, double angle, const Direction3& v) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double dotav = axis.x * v.x + axis.y * v.y + axis.z * v.z;
  const double cx = axis.y * v.z - axis.z * v.y;
  const double cy = axis.z * v.x - axis.x * v.z;
  const double cz = axis.x * v.y - axis.y * v.x;
  return Direction3::normalized(v.x * c + cx * s + axis.x * dotav * (1 - c),
                                v.y * c + cy * s + axis.y * dotav * (1 - c),
                                v.z * c + cz * s + axis.z * dotav * (1 - c));
}

// exp(-i angle n.S) via the spectral decomposition of n.S.
inline CMat spin1_rotor(const Direction3& axis, double angle) {
  const auto eig = bellctx::eigensystem(bellctx::spin1_operator(axis));
  CMat u(3);
  for (const auto& g : eig.groups()) {
    u = u + std::polar(1.0, -angle * g.value) * g.projector;
  }
  return u;
}

}  // namespace testsupport
