#include "latbench/trajectory/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latbench/error.hpp"

namespace latbench::trajectory {

void DrivingLimits::validate() const {
  if (!(v_max_kmh > 0.0)) throw ConfigError("v_max", "must be > 0");
  if (!(a_x_max > 0.0)) throw ConfigError("a_x_max", "must be > 0");
  if (!(a_x_min > 0.0)) throw ConfigError("a_x_min", "must be > 0");
  if (!(a_y_max > 0.0)) throw ConfigError("a_y_max", "must be > 0");
}

std::vector<double> plan_speed_profile(const std::vector<PathPoint>& path, const DrivingLimits& limits,
                                       const SpeedPlanOptions& options) {
  limits.validate();
  const std::size_t n = path.size();
  std::vector<double> v(n);
  if (n == 0) return v;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = std::abs(path[i].curvature);
    const double lateral = k > 0.0 ? std::sqrt(limits.a_y_max / k) : std::numeric_limits<double>::infinity();
    v[i] = std::min(limits.v_max(), lateral);
  }
  v.front() = std::min(v.front(), std::max(0.0, options.start_speed));
  v.back() = std::min(v.back(), std::max(0.0, options.end_speed));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double ds = path[i + 1].s - path[i].s;
    v[i + 1] = std::min(v[i + 1], std::sqrt(v[i] * v[i] + 2.0 * limits.a_x_max * ds));
  }
  for (std::size_t i = n - 1; i > 0; --i) {
    const double ds = path[i].s - path[i - 1].s;
    v[i - 1] = std::min(v[i - 1], std::sqrt(v[i] * v[i] + 2.0 * limits.a_x_min * ds));
  }
  return v;
}

double traversal_time(const Trajectory& t, std::size_t from, std::size_t to) {
  double total = 0.0;
  for (std::size_t i = from; i < to; ++i) {
    const double ds = t.path[i + 1].s - t.path[i].s;
    const double vm = t.speed[i] + t.speed[i + 1];
    total += vm > 0.0 ? 2.0 * ds / vm : std::numeric_limits<double>::infinity();
  }
  return total;
}

std::vector<Section> straight_sections(const Trajectory& t, double curvature_threshold, double min_duration) {
  if (t.speed.size() != t.path.size()) throw ArgumentError("straight_sections needs a speed profile");
  std::vector<Section> out;
  const std::size_t n = t.path.size();
  std::size_t i = 0;
  while (i < n) {
    if (std::abs(t.path[i].curvature) >= curvature_threshold) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && std::abs(t.path[j + 1].curvature) < curvature_threshold) ++j;
    if (j > i && traversal_time(t, i, j) > min_duration) out.push_back({t.path[i].s, t.path[j].s});
    i = j + 1;
  }
  return out;
}

Trajectory mirrored(const Trajectory& t) {
  Trajectory m = t;
  for (auto& p : m.path) {
    p.y = -p.y;
    p.heading = -p.heading;
    p.curvature = -p.curvature;
  }
  m.name = t.name + "_mirrored";
  return m;
}

}  // namespace latbench::trajectory
