#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latbench/controllers/config.hpp"
#include "latbench/trajectory/trajectory.hpp"
#include "latbench/vehicle/params.hpp"
#include "latbench/vehicle/plant.hpp"
#include "latbench/vehicle/tire.hpp"

namespace latbench::controllers {

/// Measurement noise and plant setup for one closed-loop run.
struct SimOptions {
  double control_period = 0.05;
  double plant_step = 0.001;
  vehicle::TireModel tire = vehicle::TireModel::magic_formula();
  /// Constant speed: v_x is frozen at its initial value.
  bool hold_speed = false;
  /// White Gaussian measurement noise on position (m, per axis) and heading (rad).
  double position_noise = 0.001;
  double heading_noise = 0.0001;
  std::uint64_t seed = 0;
  /// Initial offset to the left of the path start, m.
  double initial_lateral_offset = 0.0;
  /// Initial speed; defaults to the planned speed at the first point.
  std::optional<double> initial_speed;
  double divergence_threshold = 3.0;
  /// Minimum speed reference until the end is reached.
  double creep_speed = 1.0;
  double speed_gain = 1.0;
  /// Distance before the last point at which the run counts as finished.
  double end_tolerance = 0.5;
  /// Extra simulated time allowed beyond the planned traversal time.
  double time_margin = 60.0;
  /// Plant parameters when they differ from the controller's model; the
  /// controller always sees the parameters passed to run_closed_loop.
  std::optional<vehicle::VehicleParams> plant_params;
};

/// One control tick. u_ff, u_fb and their clamped sum are normalized; delta_t
/// is the steering-wheel reference in rad; e_y is the true closest-point error.
struct SimTick {
  double t = 0.0;
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;
  double v_x = 0.0;
  double y_1 = 0.0;
  double e_psi = 0.0;
  double kappa_preview = 0.0;
  double kappa = 0.0;
  double u_ff = 0.0;
  double u_fb = 0.0;
  double delta_t = 0.0;
  double e_y = 0.0;
  bool clamped = false;
  double delta_d = 0.0;  // steering-wheel angle after the tick
};

enum class Termination { kReachedEnd, kDiverged, kTimeout };

struct SimLog {
  std::vector<SimTick> ticks;
  Termination termination = Termination::kTimeout;
  int controller_faults = 0;
  double sample_time = 0.05;

  bool diverged() const { return termination != Termination::kReachedEnd; }
};

std::string termination_name(Termination t);

SimLog run_closed_loop(const trajectory::Trajectory& trajectory, const ControllerConfig& controller,
                       const vehicle::VehicleParams& params, const SimOptions& options = {});

}  // namespace latbench::controllers
