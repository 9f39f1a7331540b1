#include "bellctx/sampler.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bellctx/rng.hpp"

namespace bellctx {

namespace {

PureState collapse(const PureState& state, const CMat& projector, double prob) {
  std::array<cplx, kMaxDim> tmp{};
  projector.apply(state.amplitudes(), std::span<cplx>(tmp.data(), state.dim()));
  // prob = ||P psi||^2 was already computed from the Born rule.
  const double inv = 1.0 / std::sqrt(prob);
  for (int i = 0; i < state.dim(); ++i) tmp[i] *= inv;
  return PureState::normalized(std::span<const cplx>(tmp.data(), state.dim()));
}

double born_probability(const PureState& state, const CMat& projector) {
  std::array<cplx, kMaxDim> tmp{};
  projector.apply(state.amplitudes(), std::span<cplx>(tmp.data(), state.dim()));
  double p = 0.0;
  for (int i = 0; i < state.dim(); ++i) p += std::norm(tmp[i]);
  return p;
}

// Outcome labels of spin observables are exact small integers; do not let
// eigensolver round-off (~1e-15) leak into recorded outcomes and means.
double snap_outcome(double v) {
  const double nearest = std::round(v);
  return std::abs(v - nearest) <= 1e-9 ? nearest : v;
}

}  // namespace

MeasurementOutcome measure_once(const PureState& state, const EigenSystem& eig, double u) {
  const auto& groups = eig.groups();
  double cumulative = 0.0;
  for (size_t g = 0; g < groups.size(); ++g) {
    const double p = born_probability(state, groups[g].projector);
    cumulative += p;
    // The last group absorbs round-off so a draw never falls off the end.
    if (u < cumulative || g + 1 == groups.size()) {
      return MeasurementOutcome{static_cast<int>(g), groups[g].value,
                                collapse(state, groups[g].projector, p)};
    }
  }
  throw NumericalError("projective measurement found no eigenspace");
}

ShotEstimate sample_pair(const PureState& state, const HermitianObservable& first,
                         const HermitianObservable& second, long long shots,
                         std::uint64_t seed, MeasurementRecord* record) {
  if (shots < 1) throw OutOfRange("shots must be >= 1");
  if (std::abs(state.norm() - 1.0) > 1e-9) throw NotNormalized("state is not unit-norm");
  if (commutator_norm(first, second) > default_tolerances().commuting_pair) {
    throw NotCommuting("sample_pair needs a commuting pair of observables");
  }

  const EigenSystem eig_first = eigensystem(first);
  const EigenSystem eig_second = eigensystem(second);

  // The outcome distribution factorizes over the first observable's
  // eigenspaces: precompute each branch probability, its collapsed state, and
  // the conditional second-outcome distribution, then drive each shot with
  // two uniform draws. This is the sequential collapse model evaluated once
  // per branch instead of once per shot.
  const size_t n_first = eig_first.groups().size();
  const size_t n_second = eig_second.groups().size();
  std::vector<double> p_first(n_first);
  std::vector<double> v_first(n_first);
  std::vector<std::vector<double>> p_second(n_first, std::vector<double>(n_second));
  std::vector<double> v_second(n_second);

  for (size_t g = 0; g < n_first; ++g) {
    p_first[g] = born_probability(state, eig_first.groups()[g].projector);
    v_first[g] = snap_outcome(eig_first.groups()[g].value);
    if (p_first[g] > 1e-300) {
      const PureState branch = collapse(state, eig_first.groups()[g].projector, p_first[g]);
      for (size_t h = 0; h < n_second; ++h) {
        p_second[g][h] = born_probability(branch, eig_second.groups()[h].projector);
      }
    }
  }
  for (size_t h = 0; h < n_second; ++h) {
    v_second[h] = snap_outcome(eig_second.groups()[h].value);
  }

  Xoshiro256 rng(seed);
  if (record) {
    record->outcomes.clear();
    record->outcomes.reserve(static_cast<size_t>(shots));
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  for (long long shot = 0; shot < shots; ++shot) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();

    size_t g = n_first - 1;
    double cumulative = 0.0;
    for (size_t i = 0; i < n_first; ++i) {
      cumulative += p_first[i];
      if (u1 < cumulative) {
        g = i;
        break;
      }
    }
    size_t h = n_second - 1;
    cumulative = 0.0;
    for (size_t i = 0; i < n_second; ++i) {
      cumulative += p_second[g][i];
      if (u2 < cumulative) {
        h = i;
        break;
      }
    }

    const double product = v_first[g] * v_second[h];
    sum += product;
    sum_sq += product * product;
    if (record) {
      record->outcomes.emplace_back(static_cast<int>(std::lround(v_first[g])),
                                    static_cast<int>(std::lround(v_second[h])));
    }
  }

  ShotEstimate est;
  est.shots = shots;
  est.seed = seed;
  est.mean = sum / static_cast<double>(shots);
  if (shots > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * sum / static_cast<double>(shots)) /
                          static_cast<double>(shots - 1));
    est.std_err = std::sqrt(var / static_cast<double>(shots));
  }
  return est;
}

ShotEstimate estimate_kcbs(const QutritPure& state, const KcbsObservables& obs,
                           long long shots_per_term, std::uint64_t seed) {
  double mean = 0.0;
  double var = 0.0;
  for (int i = 0; i < 5; ++i) {
    const ShotEstimate term =
        sample_pair(state.state(), obs.a_ops()[i], obs.a_ops()[(i + 1) % 5],
                    shots_per_term, derive_seed(seed, static_cast<std::uint64_t>(i)));
    mean += term.mean;
    var += term.std_err * term.std_err;
  }
  return ShotEstimate{mean, std::sqrt(var), shots_per_term, seed};
}

ShotEstimate estimate_chsh(const PureState& state, const ChshSettings& settings,
                           long long shots_per_term, std::uint64_t seed) {
  if (state.dim() != 4) {
    throw DimensionMismatch("CHSH sampling expects a two-qubit (dim-4) state");
  }
  const HermitianObservable id2 = identity_observable(2);
  const std::array<std::pair<const Direction3*, const Direction3*>, 4> pairs{
      std::pair{&settings.alice_a, &settings.bob_b},
      std::pair{&settings.alice_a, &settings.bob_b_prime},
      std::pair{&settings.alice_a_prime, &settings.bob_b},
      std::pair{&settings.alice_a_prime, &settings.bob_b_prime}};
  const std::array<double, 4> signs{1.0, 1.0, 1.0, -1.0};

  double mean = 0.0;
  double var = 0.0;
  for (int i = 0; i < 4; ++i) {
    const HermitianObservable first = tensor(qubit_observable(*pairs[i].first), id2);
    const HermitianObservable second = tensor(id2, qubit_observable(*pairs[i].second));
    const ShotEstimate term = sample_pair(state, first, second, shots_per_term,
                                          derive_seed(seed, static_cast<std::uint64_t>(i)));
    mean += signs[i] * term.mean;
    var += term.std_err * term.std_err;
  }
  return ShotEstimate{mean, std::sqrt(var), shots_per_term, seed};
}

}  // namespace bellctx
