#pragma once

#include <cmath>

#include "bellctx/errors.hpp"
#include "bellctx/tolerances.hpp"

namespace bellctx {

// Unit vector in real 3-space. Measurement axes for both the spin-1 and the
// spin-1/2 scenarios are of this type.
struct Direction3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  Direction3() = default;

  Direction3(double x0, double y0, double z0,
             const Tolerances& tol = default_tolerances())
      : x(x0), y(y0), z(z0) {
    const double n2 = x * x + y * y + z * z;
    if (std::abs(n2 - 1.0) > 2.0 * tol.unit_norm) {
      throw NotUnit("direction is not unit-norm");
    }
  }

  // Scales an arbitrary nonzero vector onto the unit sphere.
  static Direction3 normalized(double x0, double y0, double z0) {
    const double n = std::sqrt(x0 * x0 + y0 * y0 + z0 * z0);
    if (n < 1e-300) throw ZeroVector("cannot normalize zero direction");
    return Direction3(x0 / n, y0 / n, z0 / n);
  }
};

inline double dot(const Direction3& a, const Direction3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace bellctx
