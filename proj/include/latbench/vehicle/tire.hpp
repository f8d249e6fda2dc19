#pragma once

#include "latbench/vehicle/params.hpp"

namespace latbench::vehicle {

enum class TireKind { kLinear, kMagicFormula };

struct TireModel {
  TireKind kind = TireKind::kMagicFormula;
  double c_shape = 1.3;

  static TireModel linear() { return {TireKind::kLinear, 1.3}; }
  static TireModel magic_formula(double c_shape = 1.3) { return {TireKind::kMagicFormula, c_shape}; }
};

/// Magic-formula coefficients of one axle: F = D sin(C atan(B alpha)).
struct MagicFormulaAxle {
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
};

struct AxleLoads {
  double front = 0.0;
  double rear = 0.0;
};

struct AxleForces {
  double front = 0.0;
  double rear = 0.0;
};

/// Static normal loads from the longitudinal CG position.
AxleLoads static_axle_loads(const VehicleParams& params);

/// Cornering stiffness of the whole axle (2 C scaled by a3 / nominal a3).
double axle_cornering_stiffness_front(const VehicleParams& params);
double axle_cornering_stiffness_rear(const VehicleParams& params);

/// D = mu F_z; B chosen so that B C D equals the axle cornering stiffness.
MagicFormulaAxle magic_formula_front(const VehicleParams& params, double c_shape);
MagicFormulaAxle magic_formula_rear(const VehicleParams& params, double c_shape);

double magic_formula_force(const MagicFormulaAxle& axle, double slip);

/// Front and rear slip angles; requires v_x > 0.1 m/s.
struct SlipAngles {
  double front = 0.0;
  double rear = 0.0;
};
SlipAngles slip_angles(double v_x, double v_y, double yaw_rate, double delta_front,
                       const VehicleParams& params);

/// Lateral axle forces for front road-wheel angle delta_front.
/// Throws DegenerateSpeedError for v_x <= 0.1 m/s.
AxleForces lateral_tire_forces(double v_x, double v_y, double yaw_rate, double delta_front,
                               const VehicleParams& params, const TireModel& tire);

}  // namespace latbench::vehicle
