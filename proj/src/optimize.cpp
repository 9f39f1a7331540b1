#include "bellctx/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bellctx {

namespace {

double guarded(const std::function<double(std::span<const double>)>& f,
               std::span<const double> x, int& evals) {
  ++evals;
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0,
                             std::span<const double> steps, double ftol,
                             int max_evals) {
  const size_t n = x0.size();
  const size_t m = n + 1;

  std::vector<std::vector<double>> simplex(m, std::vector<double>(x0.begin(), x0.end()));
  std::vector<double> fv(m);
  int evals = 0;

  for (size_t i = 1; i < m; ++i) simplex[i][i - 1] += steps[i - 1];
  for (size_t i = 0; i < m; ++i) fv[i] = guarded(f, simplex[i], evals);

  std::vector<size_t> order(m);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  bool converged = false;
  while (evals < max_evals) {
    for (size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    const size_t best = order[0];
    const size_t worst = order[m - 1];
    const size_t second_worst = order[m - 2];

    if (std::isfinite(fv[best]) && fv[worst] - fv[best] < ftol) {
      converged = true;
      break;
    }

    for (size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (size_t i = 0; i < m; ++i)
        if (i != worst) acc += simplex[i][j];
      centroid[j] = acc / static_cast<double>(n);
    }

    for (size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - simplex[worst][j]);
    const double fr = guarded(f, xr, evals);

    if (fr < fv[best]) {
      for (size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - simplex[worst][j]);
      const double fe = guarded(f, xe, evals);
      if (fe < fr) {
        simplex[worst] = xe;
        fv[worst] = fe;
      } else {
        simplex[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[second_worst]) {
      simplex[worst] = xr;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      if (outside) {
        for (size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
      } else {
        for (size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
      }
      const double fc = guarded(f, xc, evals);
      if (fc < std::min(fr, fv[worst])) {
        simplex[worst] = xc;
        fv[worst] = fc;
      } else {
        for (size_t i = 0; i < m; ++i) {
          if (i == best) continue;
          for (size_t j = 0; j < n; ++j)
            simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
          fv[i] = guarded(f, simplex[i], evals);
        }
      }
    }
  }

  size_t best = 0;
  for (size_t i = 1; i < m; ++i)
    if (fv[i] < fv[best]) best = i;

  NelderMeadResult r;
  r.x = simplex[best];
  r.f = fv[best];
  r.evals = evals;
  r.converged = converged;
  return r;
}

}  // namespace bellctx
