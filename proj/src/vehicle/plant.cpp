#include "latbench/vehicle/plant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latbench/error.hpp"

namespace latbench::vehicle {
namespace {

VehicleState axpy(const VehicleState& s, double h, const VehicleState& d) {
  return {s.x + h * d.x,           s.y + h * d.y,
          s.psi + h * d.psi,       s.v_x + h * d.v_x,
          s.v_y + h * d.v_y,       s.yaw_rate + h * d.yaw_rate,
          s.delta_d + h * d.delta_d, s.delta_d_rate + h * d.delta_d_rate};
}

// Kinematic single-track: lateral velocity and yaw rate follow from the steering angle.
void kinematic_lateral(double v_x, double delta_front, const VehicleParams& p, double& v_y, double& yaw_rate) {
  const double beta = std::atan(p.l_r * std::tan(delta_front) / p.wheelbase());
  v_y = v_x * std::tan(beta);
  yaw_rate = v_x * std::cos(beta) * std::tan(delta_front) / p.wheelbase();
}

}  // namespace

bool VehicleState::finite() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(psi) && std::isfinite(v_x) &&
         std::isfinite(v_y) && std::isfinite(yaw_rate) && std::isfinite(delta_d) && std::isfinite(delta_d_rate);
}

SteeringPd::SteeringPd(double rate_limit, double kp, double kd) : rate_limit_(rate_limit), kp_(kp), kd_(kd) {
  if (!(rate_limit > 0.0)) throw ArgumentError("steering PD rate limit must be > 0");
}

double SteeringPd::torque(double delta_cmd, double delta_d, double dt) {
  if (!(dt > 0.0)) throw ArgumentError("steering PD step must be > 0");
  if (!primed_) reference_ = delta_d;
  const double step = rate_limit_ * dt;
  reference_ += std::clamp(delta_cmd - reference_, -step, step);
  const double e = reference_ - delta_d;
  const double e_dot = primed_ ? (e - previous_error_) / dt : 0.0;
  previous_error_ = e;
  primed_ = true;
  return kp_ * e + kd_ * e_dot;
}

double self_aligning_torque(double front_force, const VehicleParams& params) {
  return params.pneumatic_trail * front_force / params.R_S;
}

LateralRates lateral_dynamics(double v_x, double v_y, double yaw_rate, double delta_front,
                              const VehicleParams& params, const TireModel& tire) {
  const AxleForces f = lateral_tire_forces(v_x, v_y, yaw_rate, delta_front, params, tire);
  const double c = std::cos(delta_front);
  LateralRates out;
  out.v_y_dot = (f.front * c + f.rear) / params.m - v_x * yaw_rate;
  out.yaw_acc = (params.l_f * f.front * c - params.l_r * f.rear) / params.I_z;
  out.front_force = f.front;
  return out;
}

VehicleState plant_derivative(const VehicleState& s, double steering_torque, double a_x_command,
                              const VehicleParams& p, const TireModel& tire, const PlantOptions& options) {
  const double delta = s.front_wheel_angle(p);
  VehicleState d{};
  double v_y = s.v_y;
  double yaw_rate = s.yaw_rate;
  double front_force = 0.0;

  if (s.v_x < options.kinematic_speed) {
    // Lateral states are algebraic here and reassigned after each step.
    kinematic_lateral(s.v_x, delta, p, v_y, yaw_rate);
    d.v_x = options.hold_speed ? 0.0 : a_x_command;
  } else {
    const LateralRates lat = lateral_dynamics(s.v_x, v_y, yaw_rate, delta, p, tire);
    d.v_y = lat.v_y_dot;
    d.yaw_rate = lat.yaw_acc;
    front_force = lat.front_force;
    d.v_x = options.hold_speed ? 0.0 : a_x_command - front_force * std::sin(delta) / p.m + v_y * yaw_rate;
  }

  const double c = std::cos(s.psi);
  const double sn = std::sin(s.psi);
  d.x = s.v_x * c - v_y * sn;
  d.y = s.v_x * sn + v_y * c;
  d.psi = yaw_rate;
  d.delta_d = s.delta_d_rate;
  d.delta_d_rate = (steering_torque - self_aligning_torque(front_force, p) - p.B_u * s.delta_d_rate) / p.J_s;
  return d;
}

VehicleState plant_step(const VehicleState& s, double steering_torque, double a_x_command, double dt,
                        const VehicleParams& p, const TireModel& tire, const PlantOptions& options) {
  if (!(dt > 0.0 && dt <= 0.01)) throw ArgumentError("plant step must lie in (0, 0.01] s");
  if (!s.finite()) throw SimulationDiverged("non-finite plant state");
  const bool kinematic = s.v_x < options.kinematic_speed;
  // Mode is frozen over the step so the RK4 stages see one vector field.
  PlantOptions stage = options;
  stage.kinematic_speed = kinematic ? std::numeric_limits<double>::infinity() : -1.0;
  auto f = [&](const VehicleState& x) {
    VehicleState y = x;
    if (!kinematic) y.v_x = std::max(y.v_x, options.kinematic_speed);
    return plant_derivative(y, steering_torque, a_x_command, p, tire, stage);
  };
  const VehicleState k1 = f(s);
  const VehicleState k2 = f(axpy(s, 0.5 * dt, k1));
  const VehicleState k3 = f(axpy(s, 0.5 * dt, k2));
  const VehicleState k4 = f(axpy(s, dt, k3));
  VehicleState n = s;
  const double w = dt / 6.0;
  n.x += w * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
  n.y += w * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
  n.psi += w * (k1.psi + 2 * k2.psi + 2 * k3.psi + k4.psi);
  n.v_x += w * (k1.v_x + 2 * k2.v_x + 2 * k3.v_x + k4.v_x);
  n.v_y += w * (k1.v_y + 2 * k2.v_y + 2 * k3.v_y + k4.v_y);
  n.yaw_rate += w * (k1.yaw_rate + 2 * k2.yaw_rate + 2 * k3.yaw_rate + k4.yaw_rate);
  n.delta_d += w * (k1.delta_d + 2 * k2.delta_d + 2 * k3.delta_d + k4.delta_d);
  n.delta_d_rate += w * (k1.delta_d_rate + 2 * k2.delta_d_rate + 2 * k3.delta_d_rate + k4.delta_d_rate);
  if (!n.finite()) throw SimulationDiverged("non-finite plant state");

  n.v_x = std::max(0.0, n.v_x);
  n.delta_d_rate = std::clamp(n.delta_d_rate, -p.delta_dot_max, p.delta_dot_max);
  if (n.delta_d > p.delta_max || n.delta_d < -p.delta_max) {
    n.delta_d = std::clamp(n.delta_d, -p.delta_max, p.delta_max);
    if (n.delta_d * n.delta_d_rate > 0.0) n.delta_d_rate = 0.0;
  }
  if (kinematic || n.v_x < options.kinematic_speed) kinematic_lateral(n.v_x, n.front_wheel_angle(p), p, n.v_y, n.yaw_rate);
  return n;
}

}  // namespace latbench::vehicle
