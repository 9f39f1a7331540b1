#pragma once

#include <array>

#include "bellctx/geometry.hpp"
#include "bellctx/linalg.hpp"
#include "bellctx/optimize.hpp"
#include "bellctx/symmetric.hpp"

namespace bellctx {

// Five spin measurement directions with cyclically adjacent pairs orthogonal.
// Adjacency in the index makes A_i and A_{i+1} jointly measurable.
class PentagramConfig {
 public:
  explicit PentagramConfig(std::array<Direction3, 5> directions,
                           const Tolerances& tol = default_tolerances());

  const std::array<Direction3, 5>& directions() const { return dirs_; }
  const Direction3& direction(int i) const { return dirs_[i]; }

 private:
  std::array<Direction3, 5> dirs_;
};

// The symmetric cone construction: directions
//   l_j = (sin(t) cos(4 pi j / 5), sin(t) sin(4 pi j / 5), cos(t)),  j = 0..4
// with cos^2(t) = cos(pi/5) / (1 + cos(pi/5)) = 1/sqrt(5). The azimuth step
// 4 pi / 5 orders the vectors as a pentagram, so consecutive indices are
// orthogonal.
PentagramConfig standard_pentagram();

// d_x S_x + d_y S_y + d_z S_z with the standard spin-1 matrices in the
// (|1>, |0>, |-1>) basis; spectrum {-1, 0, +1}.
HermitianObservable spin1_operator(const Direction3& d);

// The five dichotomic observables A_i = 2 S_i^2 - 1 (spectrum {-1, +1, +1})
// together with the cyclic products A_i A_{i+1}. Construction asserts the
// adjacent-pair commutators vanish and each spectrum is {-1, +1, +1}.
class KcbsObservables {
 public:
  explicit KcbsObservables(const PentagramConfig& pentagram,
                           const Tolerances& tol = default_tolerances());

  const std::array<HermitianObservable, 5>& a_ops() const { return a_ops_; }
  const std::array<HermitianObservable, 5>& products() const { return products_; }

 private:
  std::array<HermitianObservable, 5> a_ops_;
  std::array<HermitianObservable, 5> products_;
};

KcbsObservables kcbs_observables(const PentagramConfig& pentagram);

// sum_i <A_i A_{i+1 mod 5}>. Below -3 is contextual; the quantum minimum is
// 5 - 4 sqrt(5), attained by |0> on the standard pentagram.
double kcbs_value(const QutritPure& state, const KcbsObservables& obs);

inline constexpr double kcbs_classical_bound() { return -3.0; }
// 5 - 4 sqrt(5)
double kcbs_quantum_min();

// (5 - 3 sqrt(5)) C - sqrt(5): the minimum KCBS value attainable by a state
// of concurrence C. Verified independently by kcbs_min_for_concurrence.
double s_min_closed_form(double concurrence);

struct KcbsMinResult {
  double value = 0.0;
  QutritPure argmin;
  double achieved_concurrence = 0.0;  // |2ac - b^2| of argmin
  int evaluations = 0;
};

// Numerical minimum of kcbs_value over qutrit states whose embedded two-qubit
// form has concurrence `concurrence`, on the standard pentagram. Multi-start
// Nelder-Mead over (moduli, two relative phases); every candidate is projected
// exactly onto the concurrence constraint surface before evaluation, so the
// returned argmin satisfies the constraint to round-off. Directions stay fixed
// because a global rotation of state and pentagram leaves the value unchanged.
KcbsMinResult kcbs_min_for_concurrence(double concurrence,
                                       const OptimizerParams& params = {});

}  // namespace bellctx
