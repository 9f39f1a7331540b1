#include "bellctx/kcbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "bellctx/entanglement.hpp"
#include "bellctx/rng.hpp"

namespace bellctx {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const CMat& spin_x() {
  static const CMat m(3, {0.0, kInvSqrt2, 0.0,
                          kInvSqrt2, 0.0, kInvSqrt2,
                          0.0, kInvSqrt2, 0.0});
  return m;
}

const CMat& spin_y() {
  static const CMat m(3, {0.0, cplx(0.0, -kInvSqrt2), 0.0,
                          cplx(0.0, kInvSqrt2), 0.0, cplx(0.0, -kInvSqrt2),
                          0.0, cplx(0.0, kInvSqrt2), 0.0});
  return m;
}

const CMat& spin_z() {
  static const CMat m(3, {1.0, 0.0, 0.0,
                          0.0, 0.0, 0.0,
                          0.0, 0.0, -1.0});
  return m;
}

void check_concurrence_arg(double c) {
  if (!(c >= -1e-12 && c <= 1.0 + 1e-12)) {
    throw InvalidConcurrence("concurrence " + std::to_string(c) + " outside [0, 1]");
  }
}

}  // namespace

PentagramConfig::PentagramConfig(std::array<Direction3, 5> directions, const Tolerances& tol)
    : dirs_(directions) {
  for (int i = 0; i < 5; ++i) {
    const double d = dot(dirs_[i], dirs_[(i + 1) % 5]);
    if (std::abs(d) > tol.unit_norm) {
      throw OutOfRange("pentagram directions " + std::to_string(i) + " and " +
                       std::to_string((i + 1) % 5) + " are not orthogonal");
    }
  }
}

PentagramConfig standard_pentagram() {
  // cos^2(t) = 1/sqrt(5) makes adjacent directions orthogonal:
  // sin^2(t) cos(4 pi/5) + cos^2(t) = 0.
  const double cos2 = 1.0 / std::sqrt(5.0);
  const double cos_t = std::sqrt(cos2);
  const double sin_t = std::sqrt(1.0 - cos2);
  std::array<Direction3, 5> dirs;
  for (int j = 0; j < 5; ++j) {
    const double phi = 4.0 * std::numbers::pi * j / 5.0;
    dirs[j] = Direction3(sin_t * std::cos(phi), sin_t * std::sin(phi), cos_t);
  }
  return PentagramConfig(dirs);
}

HermitianObservable spin1_operator(const Direction3& d) {
  const double n2 = d.x * d.x + d.y * d.y + d.z * d.z;
  if (std::abs(n2 - 1.0) > 2e-12) {
    throw NotUnit("spin direction is not unit-norm");
  }
  return HermitianObservable(cplx(d.x) * spin_x() + cplx(d.y) * spin_y() +
                             cplx(d.z) * spin_z());
}

KcbsObservables::KcbsObservables(const PentagramConfig& pentagram, const Tolerances& tol)
    : a_ops_{HermitianObservable(CMat::identity(3)), HermitianObservable(CMat::identity(3)),
             HermitianObservable(CMat::identity(3)), HermitianObservable(CMat::identity(3)),
             HermitianObservable(CMat::identity(3))},
      products_(a_ops_) {
  const CMat id = CMat::identity(3);
  for (int i = 0; i < 5; ++i) {
    const CMat s = spin1_operator(pentagram.direction(i)).matrix();
    a_ops_[i] = HermitianObservable(cplx(2.0) * (s * s) - id);
  }
  for (int i = 0; i < 5; ++i) {
    if (commutator_norm(a_ops_[i], a_ops_[(i + 1) % 5]) > tol.unit_norm) {
      throw NotCommuting("adjacent KCBS observables do not commute");
    }
    products_[i] = HermitianObservable(a_ops_[i].matrix() * a_ops_[(i + 1) % 5].matrix());
    const auto spectrum = eigensystem(a_ops_[i]).eigenvalues();
    if (std::abs(spectrum[0] + 1.0) > tol.reconstruction ||
        std::abs(spectrum[1] - 1.0) > tol.reconstruction ||
        std::abs(spectrum[2] - 1.0) > tol.reconstruction) {
      throw NumericalError("A_i spectrum is not {-1, +1, +1}");
    }
  }
}

KcbsObservables kcbs_observables(const PentagramConfig& pentagram) {
  return KcbsObservables(pentagram);
}

double kcbs_value(const QutritPure& state, const KcbsObservables& obs) {
  double sum = 0.0;
  for (const HermitianObservable& p : obs.products()) {
    sum += expectation(state.state(), p);
  }
  return sum;
}

double kcbs_quantum_min() { return 5.0 - 4.0 * std::sqrt(5.0); }

double s_min_closed_form(double concurrence) {
  check_concurrence_arg(concurrence);
  return (5.0 - 3.0 * std::sqrt(5.0)) * concurrence - std::sqrt(5.0);
}

namespace {

// Qutrit amplitudes as nonnegative moduli plus two relative phases; the
// global phase is fixed by keeping b real >= 0.
struct PolarTriple {
  double ra = 0.0, rb = 0.0, rc = 0.0;
  double phi_a = 0.0, phi_c = 0.0;

  std::array<cplx, 3> amplitudes() const {
    return {cplx(ra * std::cos(phi_a), ra * std::sin(phi_a)), cplx(rb, 0.0),
            cplx(rc * std::cos(phi_c), rc * std::sin(phi_c))};
  }

  double concurrence() const {
    const auto a = amplitudes();
    return std::abs(2.0 * a[0] * a[2] - a[1] * a[1]);
  }
};

double wrap_pi(double x) {
  while (x > std::numbers::pi) x -= 2.0 * std::numbers::pi;
  while (x < -std::numbers::pi) x += 2.0 * std::numbers::pi;
  return x;
}

// Moves a unit triple onto the surface |2ac - b^2| = target exactly.
//
// With rho = 2 ra rc, sigma = rb^2 and delta = phi_a + phi_c the invariant is
// C^2 = rho^2 + sigma^2 - 2 rho sigma cos(delta), so phase adjustment alone
// reaches any target in [|rho - sigma|, rho + sigma]. Outside that interval
// the moduli are rebalanced along closed-form paths that keep the norm at 1.
PolarTriple project_to_concurrence(PolarTriple p, double target) {
  const double rho = 2.0 * p.ra * p.rc;
  const double sigma = p.rb * p.rb;
  const double tau = p.ra * p.ra + p.rc * p.rc;
  const double delta = wrap_pi(p.phi_a + p.phi_c);

  // Phase route: rotate delta, leaving all moduli untouched.
  if (rho > 1e-30 && sigma > 1e-30 && target >= std::abs(rho - sigma) - 1e-15 &&
      target <= rho + sigma + 1e-15) {
    const double cos_target =
        std::clamp((rho * rho + sigma * sigma - target * target) / (2.0 * rho * sigma),
                   -1.0, 1.0);
    const double mag = std::acos(cos_target);
    const double new_delta = (delta >= 0.0) ? mag : -mag;
    const double shift = 0.5 * (new_delta - delta);
    p.phi_a = wrap_pi(p.phi_a + shift);
    p.phi_c = wrap_pi(p.phi_c + shift);
    return p;
  }

  if (target < std::abs(rho - sigma) || rho <= 1e-30 || sigma <= 1e-30) {
    // Reach down: align the phases (delta = 0), then scale (ra, rc) by s and
    // refill rb so that (rho + tau) s^2 = 1 - target, which gives
    // |rho s^2 - (1 - s^2 tau)| = target with the norm preserved.
    if (p.ra + p.rc > 1e-15) {
      const double shift = -0.5 * delta;
      p.phi_a = wrap_pi(p.phi_a + shift);
      p.phi_c = wrap_pi(p.phi_c + shift);
      const double s2 = (1.0 - target) / (rho + tau);
      const double s = std::sqrt(s2);
      p.ra *= s;
      p.rc *= s;
      p.rb = std::sqrt(std::max(0.0, 1.0 - s2 * tau));
      return p;
    }
    // Everything sits in b: complete with a balanced a = c component.
    const double r2 = 0.25 * (1.0 - target);
    p.ra = p.rc = std::sqrt(r2);
    p.rb = std::sqrt(0.5 * (1.0 + target));
    p.phi_a = p.phi_c = 0.0;
    return p;
  }

  // Reach up (target > rho + sigma): oppose the phases (delta = pi); then
  // C = 1 - s^2 (ra - rc)^2 under the same rescaling, solvable when the
  // moduli are unbalanced enough.
  {
    const double shift = 0.5 * (std::numbers::pi - delta);
    const double gap2 = (p.ra - p.rc) * (p.ra - p.rc);
    if (gap2 > 1e-30) {
      const double s2 = (1.0 - target) / gap2;
      if (s2 * tau <= 1.0) {
        p.phi_a = wrap_pi(p.phi_a + shift);
        p.phi_c = wrap_pi(p.phi_c + shift);
        const double s = std::sqrt(s2);
        p.ra *= s;
        p.rc *= s;
        p.rb = std::sqrt(std::max(0.0, 1.0 - s2 * tau));
        return p;
      }
    }
    // Balanced moduli cannot reach the target by scaling; move everything
    // into b (concurrence 1) and come back down the b-dominant path.
    PolarTriple q;
    q.ra = q.rc = std::sqrt(0.25 * (1.0 - target));
    q.rb = std::sqrt(0.5 * (1.0 + target));
    q.phi_a = q.phi_c = 0.0;
    return q;
  }
}

struct Candidate {
  double value = 0.0;
  PolarTriple triple;
  bool valid = false;
};

}  // namespace

KcbsMinResult kcbs_min_for_concurrence(double concurrence, const OptimizerParams& params) {
  check_concurrence_arg(concurrence);
  const double target = std::clamp(concurrence, 0.0, 1.0);
  static const KcbsObservables obs(standard_pentagram());

  const auto decode = [](std::span<const double> x) {
    PolarTriple p;
    const double wa = std::abs(x[0]);
    const double wb = std::abs(x[1]);
    const double wc = std::abs(x[2]);
    const double n = std::sqrt(wa * wa + wb * wb + wc * wc);
    if (n < 1e-12) return std::pair<PolarTriple, bool>({}, false);
    p.ra = wa / n;
    p.rb = wb / n;
    p.rc = wc / n;
    p.phi_a = x[3];
    p.phi_c = x[4];
    return std::pair<PolarTriple, bool>(p, true);
  };

  const auto objective = [&](std::span<const double> x) {
    auto [p, ok] = decode(x);
    if (!ok) return std::numeric_limits<double>::infinity();
    const PolarTriple q = project_to_concurrence(p, target);
    const auto amps = q.amplitudes();
    const QutritPure psi(PureState::normalized(std::span<const cplx>(amps.data(), 3)));
    return kcbs_value(psi, obs);
  };

  const std::array<double, 5> steps{0.35, 0.35, 0.35, 0.8, 0.8};
  int total_evals = 0;
  Candidate best;
  double best_before_last = std::numeric_limits<double>::infinity();

  for (int r = 0; r < params.restarts; ++r) {
    Xoshiro256 rng(derive_seed(params.seed, static_cast<std::uint64_t>(r)));
    std::array<double, 5> x0{};
    for (int i = 0; i < 3; ++i) x0[i] = rng.normal();
    x0[3] = rng.uniform(-std::numbers::pi, std::numbers::pi);
    x0[4] = rng.uniform(-std::numbers::pi, std::numbers::pi);
    if (std::abs(x0[0]) + std::abs(x0[1]) + std::abs(x0[2]) < 1e-6) x0[0] = 1.0;

    NelderMeadResult nm = nelder_mead(objective, x0, steps, params.tolerance,
                                      (3 * params.max_evals) / 4);
    // Polish from the found point with a tight simplex.
    const std::array<double, 5> fine_steps{0.01, 0.01, 0.01, 0.02, 0.02};
    NelderMeadResult polished = nelder_mead(objective, nm.x, fine_steps, params.tolerance,
                                            params.max_evals - nm.evals);
    total_evals += nm.evals + polished.evals;
    if (polished.f > nm.f) polished = nm;

    auto [p, ok] = decode(polished.x);
    if (!ok) continue;
    Candidate cand;
    cand.triple = project_to_concurrence(p, target);
    cand.value = polished.f;
    cand.valid = true;

    if (r == params.restarts - 1) best_before_last = best.valid ? best.value : best_before_last;
    if (!best.valid || cand.value < best.value ||
        (std::abs(cand.value - best.value) <= std::max(params.tolerance, 1e-12) &&
         std::tuple(cand.triple.ra, cand.triple.rb, cand.triple.rc) <
             std::tuple(best.triple.ra, best.triple.rb, best.triple.rc))) {
      best = cand;
    }
  }

  if (!best.valid) {
    throw ConvergenceFailure("no restart produced a feasible KCBS candidate");
  }
  if (params.restarts > 1 && std::isfinite(best_before_last) &&
      best_before_last - best.value > 100.0 * params.tolerance) {
    throw ConvergenceFailure(
        "KCBS minimum still improved materially in the final restart; "
        "increase the restart budget");
  }

  const auto amps = best.triple.amplitudes();
  KcbsMinResult result{
      best.value,
      QutritPure(PureState::normalized(std::span<const cplx>(amps.data(), 3))),
      best.triple.concurrence(), total_evals};
  return result;
}

}  // namespace bellctx
