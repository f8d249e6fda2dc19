#pragma once

#include <cmath>
#include <Eigen/Core>

#include "latbench/error.hpp"

namespace latbench::numerics {

/// One classical fourth-order Runge-Kutta step of x' = f(x, u) with u held.
/// Throws IntegrationError if any stage derivative is non-finite.
template <typename Vec, typename Input, typename Deriv>
Vec integrate_rk4(const Vec& x, Deriv&& derivative, const Input& input, double dt) {
  if (!(dt > 0.0)) throw ArgumentError("integrate_rk4: dt must be positive");
  auto checked = [&](const Vec& state) -> Vec {
    Vec d = derivative(state, input);
    if (!d.allFinite()) throw IntegrationError("integrate_rk4: non-finite derivative");
    return d;
  };
  const Vec k1 = checked(x);
  const Vec k2 = checked(Vec(x + 0.5 * dt * k1));
  const Vec k3 = checked(Vec(x + 0.5 * dt * k2));
  const Vec k4 = checked(Vec(x + dt * k3));
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace latbench::numerics
