#include <doctest.h>

#include <cmath>

#include "bellctx/entanglement.hpp"
#include "bellctx/symmetric.hpp"
#include "test_support.hpp"

using namespace bellctx;
using testsupport::Xoshiro256;

TEST_SUITE("symmetric") {

TEST_CASE("embed places b across the middle components") {
  const double s = 1.0 / std::sqrt(2.0);

  const PureState e_a = embed(SymmetricTwoQubit(1.0, 0.0, 0.0));
  CHECK(std::abs(e_a.amplitude(0) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(e_a.amplitude(1)) == 0.0);

  const PureState e_b = embed(SymmetricTwoQubit(0.0, 1.0, 0.0));
  CHECK(std::abs(e_b.amplitude(1) - cplx(s)) < 1e-15);
  CHECK(std::abs(e_b.amplitude(2) - cplx(s)) < 1e-15);
  CHECK(std::abs(e_b.amplitude(0)) == 0.0);
  CHECK(std::abs(e_b.amplitude(3)) == 0.0);

  const PureState e_c = embed(SymmetricTwoQubit(0.0, 0.0, 1.0));
  CHECK(std::abs(e_c.amplitude(3) - cplx(1.0)) < 1e-15);
}

TEST_CASE("to_qutrit is the componentwise reinterpretation") {
  const QutritPure q1 = to_qutrit(SymmetricTwoQubit(1.0, 0.0, 0.0));
  CHECK(std::abs(q1.amplitude(0) - cplx(1.0)) < 1e-15);

  // b |-> the neutrally polarized spin state |0>.
  const QutritPure q0 = to_qutrit(SymmetricTwoQubit(0.0, 1.0, 0.0));
  CHECK(std::abs(q0.amplitude(1) - cplx(1.0)) < 1e-15);

  const double t = 1.0 / std::sqrt(3.0);
  const QutritPure qe = to_qutrit(SymmetricTwoQubit(t, t, t));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(qe.amplitude(i) - cplx(t)) < 1e-15);
}

TEST_CASE("project_symmetric inverts embed and rejects the singlet") {
  const double s = 1.0 / std::sqrt(2.0);
  const SymmetricTwoQubit back =
      project_symmetric(PureState::from_amplitudes({0.0, s, s, 0.0}), 1e-9);
  CHECK(std::abs(back.a()) < 1e-15);
  CHECK(std::abs(back.b() - cplx(1.0)) < 1e-12);
  CHECK(std::abs(back.c()) < 1e-15);

  CHECK_THROWS_AS(project_symmetric(PureState::from_amplitudes({0.0, s, -s, 0.0}), 1e-9),
                  NotSymmetric);
}

TEST_CASE("round trip over random triples") {
  Xoshiro256 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = testsupport::random_triple(rng);
    const SymmetricTwoQubit sym(t[0], t[1], t[2]);
    const SymmetricTwoQubit back = project_symmetric(embed(sym), 1e-9);
    CHECK(std::abs(back.a() - t[0]) < 1e-12);
    CHECK(std::abs(back.b() - t[1]) < 1e-12);
    CHECK(std::abs(back.c() - t[2]) < 1e-12);
  }
}

TEST_CASE("concurrence is consistent across the embedding") {
  Xoshiro256 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = testsupport::random_triple(rng);
    const double sym_form = concurrence_symmetric(t[0], t[1], t[2]).value();
    const double pure_form =
        concurrence_pure(embed(SymmetricTwoQubit(t[0], t[1], t[2]))).value();
    CHECK(std::abs(sym_form - pure_form) < 1e-12);
  }
}

TEST_CASE("to_qutrit preserves inner products") {
  Xoshiro256 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t1 = testsupport::random_triple(rng);
    const auto t2 = testsupport::random_triple(rng);
    cplx direct = 0.0;
    for (int i = 0; i < 3; ++i) direct += std::conj(t1[i]) * t2[i];
    const QutritPure q1 = to_qutrit(SymmetricTwoQubit(t1[0], t1[1], t1[2]));
    const QutritPure q2 = to_qutrit(SymmetricTwoQubit(t2[0], t2[1], t2[2]));
    CHECK(std::abs(q1.state().inner(q2.state()) - direct) == 0.0);
  }
}

TEST_CASE("constructors reject non-normalized input") {
  CHECK_THROWS_AS(SymmetricTwoQubit(0.5, 0.0, 0.0), NotNormalized);
  CHECK_NOTHROW(SymmetricTwoQubit::normalized(0.5, 0.0, 0.0));
}

}  // TEST_SUITE
