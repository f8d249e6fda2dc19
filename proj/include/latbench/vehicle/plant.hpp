#pragma once

#include "latbench/vehicle/params.hpp"
#include "latbench/vehicle/tire.hpp"

namespace latbench::vehicle {

/// World pose, body velocities and steering-wheel angle/rate.
struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;
  double v_x = 0.0;
  double v_y = 0.0;
  double yaw_rate = 0.0;
  double delta_d = 0.0;
  double delta_d_rate = 0.0;

  double front_wheel_angle(const VehicleParams& params) const { return delta_d / params.R_S; }
  bool finite() const;
};

struct PlantOptions {
  /// Below this speed the lateral states follow the kinematic single-track model.
  double kinematic_speed = 0.5;
  /// Freeze v_x (no longitudinal dynamics); used for constant-speed studies.
  bool hold_speed = false;
};

/// Steering-actuator PD gains of the low-level loop.
inline constexpr double kSteeringKp = 18.0;
inline constexpr double kSteeringKd = 5.0;

/// Digital PD on the steering-wheel position error, sampled every plant step.
/// The commanded angle is slewed at rate_limit before it enters the loop; the
/// derivative is the backward difference of the error. The first sample primes
/// both the slewed reference (at the measured angle) and the previous error.
class SteeringPd {
 public:
  explicit SteeringPd(double rate_limit, double kp = kSteeringKp, double kd = kSteeringKd);
  double torque(double delta_cmd, double delta_d, double dt);
  double reference() const { return reference_; }
  void reset() { primed_ = false; }

 private:
  double rate_limit_;
  double kp_;
  double kd_;
  double reference_ = 0.0;
  double previous_error_ = 0.0;
  bool primed_ = false;
};

/// Torque fed back to the steering column by the front lateral force.
double self_aligning_torque(double front_force, const VehicleParams& params);

/// Dynamic-mode lateral accelerations (v_y', yaw_rate') for front road-wheel angle delta.
struct LateralRates {
  double v_y_dot = 0.0;
  double yaw_acc = 0.0;
  double front_force = 0.0;
};
LateralRates lateral_dynamics(double v_x, double v_y, double yaw_rate, double delta_front,
                              const VehicleParams& params, const TireModel& tire);

/// Time derivative of the full state with torque and longitudinal acceleration held.
VehicleState plant_derivative(const VehicleState& state, double steering_torque, double a_x_command,
                              const VehicleParams& params, const TireModel& tire,
                              const PlantOptions& options = {});

/// One RK4 step of length dt in (0, 0.01]. Steering angle and rate are clamped
/// afterwards and v_x is kept non-negative. Throws SimulationDiverged on a
/// non-finite result.
VehicleState plant_step(const VehicleState& state, double steering_torque, double a_x_command, double dt,
                        const VehicleParams& params, const TireModel& tire, const PlantOptions& options = {});

}  // namespace latbench::vehicle
