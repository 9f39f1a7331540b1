#include <doctest.h>

#include <cmath>

#include "bellctx/entanglement.hpp"
#include "bellctx/linalg.hpp"
#include "bellctx/symmetric.hpp"
#include "test_support.hpp"

using namespace bellctx;
using testsupport::Xoshiro256;

TEST_SUITE("entanglement") {

TEST_CASE("product and Bell states") {
  CHECK(concurrence_pure(PureState::from_amplitudes({1.0, 0.0, 0.0, 0.0})).value() == 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  CHECK(concurrence_pure(PureState::from_amplitudes({s, 0.0, 0.0, s})).value() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_pure(PureState::from_amplitudes({0.0, s, s, 0.0})).value() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric closed form on the basis triples") {
  CHECK(concurrence_symmetric(1.0, 0.0, 0.0).value() == 0.0);
  // |2*0*0 - 1| = 1; cross-checked against the embedded two-qubit state.
  CHECK(concurrence_symmetric(0.0, 1.0, 0.0).value() == doctest::Approx(1.0));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(concurrence_symmetric(s, 0.0, s).value() == doctest::Approx(1.0).epsilon(1e-12));

  const PureState embedded_b = embed(SymmetricTwoQubit(0.0, 1.0, 0.0));
  CHECK(concurrence_pure(embedded_b).value() == doctest::Approx(1.0).epsilon(1e-12));
  const PureState embedded_ac = embed(SymmetricTwoQubit(s, 0.0, s));
  CHECK(concurrence_pure(embedded_ac).value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric form agrees with the embedded pure form") {
  Xoshiro256 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = testsupport::random_triple(rng);
    const double direct = concurrence_symmetric(t[0], t[1], t[2]).value();
    const double embedded =
        concurrence_pure(embed(SymmetricTwoQubit(t[0], t[1], t[2]))).value();
    CHECK(std::abs(direct - embedded) < 1e-12);
  }
}

TEST_CASE("invariant under a global phase") {
  Xoshiro256 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState psi = testsupport::random_state(4, rng);
    const cplx phase = std::polar(1.0, rng.uniform(0.0, 2.0 * testsupport::kPi));
    std::vector<cplx> rotated;
    for (const cplx& a : psi.amplitudes()) rotated.push_back(phase * a);
    CHECK(std::abs(concurrence_pure(psi).value() -
                   concurrence_pure(PureState::normalized(rotated)).value()) < 1e-14);
  }
}

TEST_CASE("invariant under local unitaries") {
  Xoshiro256 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const PureState psi = testsupport::random_state(4, rng);
    const CMat u = testsupport::random_su2(rng);
    const CMat v = testsupport::random_su2(rng);
    const PureState rotated = apply_unitary(kron(u, v), psi);
    CHECK(std::abs(concurrence_pure(psi).value() - concurrence_pure(rotated).value()) <
          1e-10);
  }
}

TEST_CASE("rejects wrong dimension and non-normalized triples") {
  CHECK_THROWS_AS(concurrence_pure(PureState::from_amplitudes({1.0, 0.0})),
                  DimensionMismatch);
  CHECK_THROWS_AS(concurrence_symmetric(0.9, 0.0, 0.0), NotNormalized);
}

}  // TEST_SUITE
