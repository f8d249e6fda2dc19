#pragma once

#include <Eigen/Core>

#include "latbench/numerics/state_space.hpp"
#include "latbench/vehicle/params.hpp"

namespace latbench::vehicle {

/// Continuous path-error model with state [e_y, e_y', e_psi, e_psi'] and input
/// front road-wheel angle. Throws DegenerateSpeedError for v_x <= 0.5 m/s.
numerics::StateSpaceModel linearized_error_model(double v_x, const VehicleParams& params);

/// Coefficient of the desired yaw rate (v_x * kappa) in the same model.
Eigen::Vector4d road_yaw_input(double v_x, const VehicleParams& params);

}  // namespace latbench::vehicle
