#include "latbench/vehicle/tire.hpp"

#include <cmath>

#include "latbench/error.hpp"

namespace latbench::vehicle {
namespace {

constexpr double kMinSlipSpeed = 0.1;

MagicFormulaAxle make_axle(double stiffness, double load, double mu, double c_shape) {
  if (!(c_shape > 0.0 && c_shape < 2.0)) throw ArgumentError("magic formula shape factor must lie in (0, 2)");
  MagicFormulaAxle axle;
  axle.C = c_shape;
  axle.D = mu * load;
  axle.B = stiffness / (axle.C * axle.D);
  return axle;
}

}  // namespace

AxleLoads static_axle_loads(const VehicleParams& params) {
  const double weight = params.m * params.g;
  const double L = params.wheelbase();
  return {weight * params.l_r / L, weight * params.l_f / L};
}

double axle_cornering_stiffness_front(const VehicleParams& params) {
  return 2.0 * params.C_f * params.a3 / kNominalA3;
}

double axle_cornering_stiffness_rear(const VehicleParams& params) {
  return 2.0 * params.C_r * params.a3 / kNominalA3;
}

MagicFormulaAxle magic_formula_front(const VehicleParams& params, double c_shape) {
  return make_axle(axle_cornering_stiffness_front(params), static_axle_loads(params).front, params.mu, c_shape);
}

MagicFormulaAxle magic_formula_rear(const VehicleParams& params, double c_shape) {
  return make_axle(axle_cornering_stiffness_rear(params), static_axle_loads(params).rear, params.mu, c_shape);
}

double magic_formula_force(const MagicFormulaAxle& axle, double slip) {
  return axle.D * std::sin(axle.C * std::atan(axle.B * slip));
}

SlipAngles slip_angles(double v_x, double v_y, double yaw_rate, double delta_front,
                       const VehicleParams& params) {
  if (!(v_x > kMinSlipSpeed)) throw DegenerateSpeedError("slip angles undefined below 0.1 m/s");
  return {delta_front - std::atan((v_y + yaw_rate * params.l_f) / v_x),
          -std::atan((v_y - yaw_rate * params.l_r) / v_x)};
}

AxleForces lateral_tire_forces(double v_x, double v_y, double yaw_rate, double delta_front,
                               const VehicleParams& params, const TireModel& tire) {
  const SlipAngles slip = slip_angles(v_x, v_y, yaw_rate, delta_front, params);
  if (tire.kind == TireKind::kLinear) {
    return {axle_cornering_stiffness_front(params) * slip.front,
            axle_cornering_stiffness_rear(params) * slip.rear};
  }
  return {magic_formula_force(magic_formula_front(params, tire.c_shape), slip.front),
          magic_formula_force(magic_formula_rear(params, tire.c_shape), slip.rear)};
}

}  // namespace latbench::vehicle
