#pragma once

#include <string>
#include <vector>

#include "latbench/trajectory/path.hpp"

namespace latbench::trajectory {

/// v_max in km/h, accelerations in m/s^2 (a_x_min is a positive deceleration).
struct DrivingLimits {
  double v_max_kmh = 50.0;
  double a_x_max = 1.0;
  double a_x_min = 1.0;
  double a_y_max = 1.0;

  double v_max() const { return v_max_kmh / 3.6; }
  void validate() const;
};

struct Trajectory {
  std::string name;
  std::string purpose;
  std::vector<PathPoint> path;
  std::vector<double> speed;  // m/s at each path point
  DrivingLimits limits;
  bool used_for_tuning = false;
  bool used_for_testing = false;

  double length() const { return path.empty() ? 0.0 : path.back().s - path.front().s; }
};

struct SpeedPlanOptions {
  double start_speed = 0.0;
  double end_speed = 0.0;
};

/// Curvature-limited profile followed by forward (acceleration) and backward
/// (deceleration) passes. Boundary speeds are capped by the pointwise limit.
std::vector<double> plan_speed_profile(const std::vector<PathPoint>& path, const DrivingLimits& limits,
                                       const SpeedPlanOptions& options = {});

struct Section {
  double s_start = 0.0;
  double s_end = 0.0;
};

/// Maximal runs with |kappa| below the threshold whose planned traversal time exceeds min_duration.
std::vector<Section> straight_sections(const Trajectory& trajectory, double curvature_threshold = 0.01,
                                       double min_duration = 5.0);

/// Traversal time of the planned profile between two path indices (trapezoidal in 1/v).
double traversal_time(const Trajectory& trajectory, std::size_t from, std::size_t to);

/// Reflection about the x axis: y, heading and curvature change sign.
Trajectory mirrored(const Trajectory& trajectory);

}  // namespace latbench::trajectory
