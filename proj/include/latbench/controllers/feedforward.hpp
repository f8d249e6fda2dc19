#pragma once

#include "latbench/vehicle/params.hpp"

namespace latbench::controllers {

/// Kinematic steering for curvature kappa, normalized by delta_max and clamped to [-1, 1].
double feedforward(double kappa, const vehicle::VehicleParams& params);

/// Normalized steering command <-> front road-wheel angle.
double normalized_to_front_angle(double u, const vehicle::VehicleParams& params);
double front_angle_to_normalized(double delta, const vehicle::VehicleParams& params);

}  // namespace latbench::controllers
