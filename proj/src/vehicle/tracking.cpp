#include "latbench/vehicle/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latbench/error.hpp"

namespace latbench::vehicle {
namespace {

constexpr std::size_t kWindowBack = 20;
constexpr std::size_t kWindowAhead = 200;

}  // namespace

PathLocator::PathLocator(const std::vector<trajectory::PathPoint>& path) : path_(&path) {
  if (path.size() < 2) throw ArgumentError("path locator needs at least two points");
}

PathProjection PathLocator::project_segment(std::size_t i, double x, double y, double& dist2) const {
  const auto& pts = *path_;
  const auto& a = pts[i];
  const auto& b = pts[i + 1];
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = ((x - a.x) * dx + (y - a.y) * dy) / len2;
  const bool last = (i + 2 == pts.size());
  const bool first = (i == 0);
  if (!(last && t > 1.0) && !(first && t < 0.0)) t = std::clamp(t, 0.0, 1.0);
  PathProjection p;
  p.segment = i;
  p.x = a.x + t * dx;
  p.y = a.y + t * dy;
  const double len = std::sqrt(len2);
  p.s = a.s + t * len;
  const double tt = std::clamp(t, 0.0, 1.0);
  p.heading = a.heading + tt * (b.heading - a.heading);
  p.curvature = a.curvature + tt * (b.curvature - a.curvature);
  if (t > 1.0) {
    p.heading = b.heading;
    p.curvature = 0.0;
    p.beyond_end = true;
  }
  const double ex = x - p.x;
  const double ey = y - p.y;
  dist2 = ex * ex + ey * ey;
  // Lateral offset measured against the local tangent.
  p.lateral = -std::sin(p.heading) * ex + std::cos(p.heading) * ey;
  return p;
}

PathProjection PathLocator::project(double x, double y) {
  const std::size_t segments = path_->size() - 1;
  std::size_t lo = 0;
  std::size_t hi = segments;
  if (hint_ != kNoHint) {
    lo = hint_ > kWindowBack ? hint_ - kWindowBack : 0;
    hi = std::min(segments, hint_ + kWindowAhead);
  }
  PathProjection best;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = lo; i < hi; ++i) {
    double d2 = 0.0;
    PathProjection p = project_segment(i, x, y, d2);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = p;
    }
  }
  hint_ = best.segment;
  return best;
}

TrackingErrors tracking_errors(const VehicleState& state, PathLocator& closest, PathLocator& preview,
                               double preview_distance) {
  if (!(preview_distance >= 0.0)) throw ArgumentError("preview distance must be >= 0");
  TrackingErrors out;
  const PathProjection c = closest.project(state.x, state.y);
  out.e_y = c.lateral;
  out.e_psi = trajectory::wrap_angle(state.psi - c.heading);
  out.s = c.s;
  out.kappa = c.curvature;
  out.beyond_end = c.beyond_end;

  const double px = state.x + preview_distance * std::cos(state.psi);
  const double py = state.y + preview_distance * std::sin(state.psi);
  const PathProjection p = preview_distance > 0.0 ? preview.project(px, py) : c;
  out.y_1 = -p.lateral;
  out.kappa_preview = p.curvature;
  return out;
}

TrackingErrors tracking_errors(const VehicleState& state, const std::vector<trajectory::PathPoint>& path,
                               double preview_distance) {
  PathLocator a(path);
  PathLocator b(path);
  return tracking_errors(state, a, b, preview_distance);
}

}  // namespace latbench::vehicle
