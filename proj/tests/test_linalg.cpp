#include <doctest.h>

#include <cmath>
#include <complex>

#include "bellctx/kcbs.hpp"
#include "bellctx/linalg.hpp"
#include "test_support.hpp"

using namespace bellctx;
using testsupport::Xoshiro256;

namespace {

CMat random_hermitian(int dim, Xoshiro256& rng) {
  CMat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = testsupport::random_cplx(rng);
  return cplx(0.5) * (m + m.adjoint());
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("normalized scales onto the unit sphere") {
  const PureState s = PureState::normalized({2.0, 0.0, 0.0});
  CHECK(std::abs(s.amplitude(0) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(s.amplitude(1)) == 0.0);
  CHECK(std::abs(s.amplitude(2)) == 0.0);

  const PureState h = PureState::normalized({1.0, 1.0});
  CHECK(std::abs(h.amplitude(0) - cplx(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(h.amplitude(1) - cplx(1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("normalized rejects the zero vector") {
  CHECK_THROWS_AS(PureState::normalized({0.0, 0.0, 0.0}), ZeroVector);
}

TEST_CASE("normalized is idempotent") {
  Xoshiro256 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> raw(3);
    for (cplx& a : raw) a = 10.0 * testsupport::random_cplx(rng);
    const PureState once = PureState::normalized(raw);
    const PureState twice = PureState::normalized(once.amplitudes());
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(once.amplitude(i) - twice.amplitude(i)) <= 1e-15);
    }
  }
}

TEST_CASE("from_amplitudes enforces unit norm and dimension") {
  CHECK_THROWS_AS(PureState::from_amplitudes({0.5, 0.5}), NotNormalized);
  CHECK_THROWS_AS(PureState::from_amplitudes({1.0}), DimensionMismatch);
  CHECK_NOTHROW(PureState::from_amplitudes({1.0, 0.0, 0.0, 0.0}));
}

TEST_CASE("expectation on Pauli-Z eigenstate and superposition") {
  const PureState up = PureState::from_amplitudes({1.0, 0.0});
  CHECK(expectation(up, pauli_z()) == doctest::Approx(1.0).epsilon(1e-12));

  const PureState plus = PureState::normalized({1.0, 1.0});
  CHECK(std::abs(expectation(plus, pauli_z())) < 1e-15);
}

TEST_CASE("expectation of a pentagram observable matches the scalar oracle") {
  const PentagramConfig penta = standard_pentagram();
  const KcbsObservables obs(penta);
  const std::array<cplx, 3> psi{0.0, 1.0, 0.0};
  const PureState state = PureState::from_amplitudes({psi[0], psi[1], psi[2]});
  for (int i = 0; i < 5; ++i) {
    const double via_matrix = expectation(state, obs.a_ops()[i]);
    const double via_scalar = 1.0 - 2.0 * testsupport::overlap_sq(penta.direction(i), psi);
    CHECK(via_matrix == doctest::Approx(via_scalar).epsilon(1e-12));
  }
}

TEST_CASE("expectation rejects dimension mismatch") {
  const PureState up = PureState::from_amplitudes({1.0, 0.0});
  CHECK_THROWS_AS(expectation(up, identity_observable(3)), DimensionMismatch);
}

TEST_CASE("expectation stays inside the spectral range") {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next() % 3);
    const HermitianObservable obs{random_hermitian(dim, rng)};
    const PureState state = testsupport::random_state(dim, rng);
    const auto evals = eigensystem(obs).eigenvalues();
    const double e = expectation(state, obs);
    CHECK(e >= evals.front() - 1e-10);
    CHECK(e <= evals.back() + 1e-10);
  }
}

TEST_CASE("tensor of identities and Pauli-Z pair") {
  const HermitianObservable i4 = tensor(identity_observable(2), identity_observable(2));
  CHECK((i4.matrix() - CMat::identity(4)).frobenius_norm() == 0.0);

  const HermitianObservable zz = tensor(pauli_z(), pauli_z());
  const CMat expected(4, {1.0, 0.0, 0.0, 0.0,
                          0.0, -1.0, 0.0, 0.0,
                          0.0, 0.0, -1.0, 0.0,
                          0.0, 0.0, 0.0, 1.0});
  CHECK((zz.matrix() - expected).frobenius_norm() == 0.0);
}

TEST_CASE("tensor matches the index-formula oracle on X x Y") {
  const cplx i(0.0, 1.0);
  const std::array<std::array<cplx, 2>, 2> x{{{0.0, 1.0}, {1.0, 0.0}}};
  const std::array<std::array<cplx, 2>, 2> y{{{0.0, -i}, {i, 0.0}}};
  const auto oracle = testsupport::kron2x2_oracle(x, y);
  const HermitianObservable xy = tensor(pauli_x(), pauli_y());
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(std::abs(xy.matrix()(r, c) - oracle[r][c]) == 0.0);
}

TEST_CASE("tensor is bilinear and norm multiplicative") {
  Xoshiro256 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat a = random_hermitian(2, rng);
    const CMat b = random_hermitian(2, rng);
    const CMat c = random_hermitian(2, rng);
    const CMat left = kron(a + b, c);
    const CMat right = kron(a, c) + kron(b, c);
    CHECK((left - right).frobenius_norm() < 1e-12);
    CHECK(kron(a, c).frobenius_norm() ==
          doctest::Approx(a.frobenius_norm() * c.frobenius_norm()).epsilon(1e-12));
  }
}

TEST_CASE("tensor refuses results beyond dimension 4") {
  CHECK_THROWS_AS(tensor(identity_observable(3), identity_observable(2)),
                  DimensionMismatch);
}

TEST_CASE("commutator_norm of a self-pair is zero") {
  CHECK(commutator_norm(pauli_z(), pauli_z()) == 0.0);
}

TEST_CASE("commutator_norm of X and Z matches direct 2x2 arithmetic") {
  // XZ - ZX computed by hand: [[0,-2],[2,0]], Frobenius norm 2 sqrt(2).
  const cplx xz00 = 0.0 * 1.0 + 1.0 * 0.0;
  const cplx xz01 = 0.0 * 0.0 + 1.0 * -1.0;
  const cplx xz10 = 1.0 * 1.0 + 0.0 * 0.0;
  const cplx xz11 = 1.0 * 0.0 + 0.0 * -1.0;
  const cplx zx01 = 1.0 * 1.0;
  const cplx zx10 = -1.0 * 1.0;
  const double oracle = std::sqrt(std::norm(xz00 - 0.0) + std::norm(xz01 - zx01) +
                                  std::norm(xz10 - zx10) + std::norm(xz11 - 0.0));
  CHECK(oracle == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(commutator_norm(pauli_x(), pauli_z()) == doctest::Approx(oracle).epsilon(1e-15));
}

TEST_CASE("adjacent pentagram observables commute") {
  const KcbsObservables obs(standard_pentagram());
  for (int i = 0; i < 5; ++i) {
    CHECK(commutator_norm(obs.a_ops()[i], obs.a_ops()[(i + 1) % 5]) < 1e-12);
  }
}

TEST_CASE("eigensystem of Pauli-Z") {
  const EigenSystem eig = eigensystem(pauli_z());
  REQUIRE(eig.eigenvalues().size() == 2);
  CHECK(eig.eigenvalues()[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues()[1] == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(eig.groups().size() == 2);
  // Eigenvalue -1 projects onto |1><1|, eigenvalue +1 onto |0><0|.
  CHECK(std::abs(eig.groups()[0].projector(1, 1) - cplx(1.0)) < 1e-12);
  CHECK(std::abs(eig.groups()[0].projector(0, 0)) < 1e-12);
  CHECK(std::abs(eig.groups()[1].projector(0, 0) - cplx(1.0)) < 1e-12);
}

TEST_CASE("eigensystem of a pentagram observable has spectrum {-1, +1, +1}") {
  const PentagramConfig penta = standard_pentagram();
  const KcbsObservables obs(penta);
  for (int i = 0; i < 5; ++i) {
    const auto evals = eigensystem(obs.a_ops()[i]).eigenvalues();
    REQUIRE(evals.size() == 3);
    CHECK(evals[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(evals[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(evals[2] == doctest::Approx(1.0).epsilon(1e-9));

    // Characteristic polynomial oracle: coefficients of (x+1)(x-1)^2 and
    // near-zero residue at the computed eigenvalues.
    const auto poly = testsupport::char_poly3(obs.a_ops()[i].matrix());
    CHECK(poly.c2 == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(poly.c1 == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(poly.c0 == doctest::Approx(1.0).epsilon(1e-10));
    for (double lambda : evals) CHECK(std::abs(poly.eval(lambda)) < 1e-9);
  }
}

TEST_CASE("eigensystem of the identity groups everything at 1") {
  for (int dim = 2; dim <= 4; ++dim) {
    const EigenSystem eig = eigensystem(identity_observable(dim));
    REQUIRE(eig.groups().size() == 1);
    CHECK(eig.groups()[0].multiplicity == dim);
    CHECK(eig.groups()[0].value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eigensystem reconstructs random Hermitian matrices") {
  Xoshiro256 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next() % 3);
    const HermitianObservable obs{random_hermitian(dim, rng)};
    const EigenSystem eig = eigensystem(obs);

    CMat rebuilt(dim);
    CMat sum(dim);
    for (const auto& g : eig.groups()) {
      rebuilt = rebuilt + cplx(g.value) * g.projector;
      sum = sum + g.projector;
    }
    CHECK((rebuilt - obs.matrix()).frobenius_norm() < 1e-9);
    CHECK((sum - CMat::identity(dim)).frobenius_norm() < 1e-10);
    for (size_t k = 1; k < eig.eigenvalues().size(); ++k) {
      CHECK(eig.eigenvalues()[k] >= eig.eigenvalues()[k - 1]);
    }
  }
}

TEST_CASE("HermitianObservable rejects non-Hermitian input") {
  CMat m(2, {0.0, 1.0, 2.0, 0.0});
  CHECK_THROWS_AS(HermitianObservable obs(m), NotHermitian);
}

}  // TEST_SUITE
