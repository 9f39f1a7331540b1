#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bellctx/chsh.hpp"
#include "bellctx/kcbs.hpp"
#include "bellctx/linalg.hpp"

namespace bellctx {

// Empirical mean of a finite-shot run. std_err is the Bessel-corrected sample
// standard deviation over sqrt(shots); a single shot reports std_err 0 by
// convention (no spread is measurable).
struct ShotEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  long long shots = 0;
  std::uint64_t seed = 0;
};

// Raw per-shot outcomes of one correlator term; values are always +/-1.
struct MeasurementRecord {
  int term_index = 0;
  std::vector<std::pair<int, int>> outcomes;
};

// One projective measurement driven by a uniform draw u in [0, 1): Born
// probabilities come from the eigenspace projectors, the state collapses onto
// the selected eigenspace.
struct MeasurementOutcome {
  int group = 0;
  double value = 0.0;
  PureState post;
};

MeasurementOutcome measure_once(const PureState& state, const EigenSystem& eig, double u);

// Sequentially measures `first` then `second` on each of `shots` fresh copies
// of `state` and averages the outcome products. The pair must commute
// (checked), which makes the joint statistics order-independent. Exactly two
// uniform draws are consumed per shot, so a fixed seed reproduces the run
// bit-for-bit; pass `record` to capture the raw outcomes.
ShotEstimate sample_pair(const PureState& state, const HermitianObservable& first,
                         const HermitianObservable& second, long long shots,
                         std::uint64_t seed, MeasurementRecord* record = nullptr);

// Five-term empirical KCBS sum. Term i uses the sub-stream derive_seed(seed, i)
// and the pair (A_i, A_{i+1}); the term standard errors combine in quadrature.
ShotEstimate estimate_kcbs(const QutritPure& state, const KcbsObservables& obs,
                           long long shots_per_term, std::uint64_t seed);

// Empirical CHSH sum <ab> + <ab'> + <a'b> - <a'b'>; each correlator is
// estimated from independent product measurements of the two qubits with its
// own derived sub-stream.
ShotEstimate estimate_chsh(const PureState& state, const ChshSettings& settings,
                           long long shots_per_term, std::uint64_t seed);

}  // namespace bellctx
