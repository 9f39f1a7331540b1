#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bellctx {

// Multi-start search budget, shared by the KCBS and CHSH optimizers and read
// from the `optimizer` config section.
struct OptimizerParams {
  int restarts = 32;
  double tolerance = 1e-10;
  int max_evals = 20000;  // objective evaluations per restart
  std::uint64_t seed = 1;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};

// Standard Nelder-Mead simplex descent (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2). Stops when the simplex function spread falls
// below ftol or the evaluation budget is exhausted. Non-finite objective
// values are treated as +infinity, so objectives may reject regions.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0,
                             std::span<const double> steps, double ftol,
                             int max_evals);

}  // namespace bellctx
