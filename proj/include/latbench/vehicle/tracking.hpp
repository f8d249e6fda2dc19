#pragma once

#include <cstddef>
#include <vector>

#include "latbench/trajectory/path.hpp"
#include "latbench/vehicle/plant.hpp"

namespace latbench::vehicle {

/// Orthogonal projection of a point onto a sampled path.
struct PathProjection {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double curvature = 0.0;
  double lateral = 0.0;  // offset of the query point, positive left of the path
  std::size_t segment = 0;
  bool beyond_end = false;  // projected onto the straight extension past the last point
};

/// Projects points onto a polyline, searching near the previous answer.
/// Beyond the last point the path is extended along its final tangent.
class PathLocator {
 public:
  explicit PathLocator(const std::vector<trajectory::PathPoint>& path);

  PathProjection project(double x, double y);
  void reset() { hint_ = kNoHint; }
  const std::vector<trajectory::PathPoint>& path() const { return *path_; }

 private:
  static constexpr std::size_t kNoHint = static_cast<std::size_t>(-1);
  PathProjection project_segment(std::size_t i, double x, double y, double& dist2) const;

  const std::vector<trajectory::PathPoint>* path_;
  std::size_t hint_ = kNoHint;
};

struct TrackingErrors {
  double y_1 = 0.0;    // path offset at the preview point, positive when the path is to the left
  double e_psi = 0.0;  // heading error at the closest point, psi - path heading
  double e_y = 0.0;    // closest-point offset of the vehicle, positive left of the path
  double s = 0.0;      // arclength of the closest point
  double kappa = 0.0;  // curvature at the closest point
  double kappa_preview = 0.0;
  bool beyond_end = false;
};

/// Evaluates the preview point preview_distance ahead along the vehicle axis.
/// Uses two locators so both searches keep their own hint.
TrackingErrors tracking_errors(const VehicleState& state, PathLocator& closest, PathLocator& preview,
                               double preview_distance);

/// Convenience overload with fresh locators (global search).
TrackingErrors tracking_errors(const VehicleState& state, const std::vector<trajectory::PathPoint>& path,
                               double preview_distance);

}  // namespace latbench::vehicle
