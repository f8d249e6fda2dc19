#pragma once

#include <string>

#include "json.hpp"

namespace latbench::vehicle {

/// Plant parameters in SI units. Steering angles on the steering-wheel side
/// (delta_max, delta_dot_max) are divided by steering_ratio to get road-wheel angles.
struct VehicleParams {
  double m = 1372.0;
  double I_z = 1990.0;
  double C_f = 37022.5;  // per tire; the axle carries 2 C_f
  double C_r = 35900.0;
  double l_f = 0.98;
  double l_r = 1.48;
  double J_s = 0.05;
  double B_u = 0.4;
  double R_S = 16.0;
  double delta_max = 8.48;
  double delta_dot_max = 10.0;
  double mu = 1.0;
  double a3 = 80157.0;
  double g = 9.81;
  double pneumatic_trail = 0.03;

  double wheelbase() const { return l_f + l_r; }
  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

/// Nominal lateral stiffness-slip factor at which a3 scaling is the identity.
inline constexpr double kNominalA3 = 80157.0;

/// Flat object keyed by the field names above; absent keys keep defaults,
/// unknown keys are rejected.
VehicleParams vehicle_params_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const VehicleParams& params);
VehicleParams load_vehicle_params(const std::string& path);

}  // namespace latbench::vehicle
