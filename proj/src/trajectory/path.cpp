#include "latbench/trajectory/path.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "latbench/error.hpp"

namespace latbench::trajectory {
namespace {

constexpr double kHeadingTolerance = 1e-6;

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 5> kGlNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                            0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGlWeights = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                              0.4786286704993665, 0.2369268850561891};

struct SegmentGeometry {
  double length = 0.0;
  double k0 = 0.0;
  double k1 = 0.0;
  std::optional<double> start_heading;
};

SegmentGeometry geometry(const Segment& segment) {
  if (const auto* st = std::get_if<Straight>(&segment)) {
    if (!(std::isfinite(st->length) && st->length > 0.0)) throw ConstructionError("straight length must be > 0");
    return {st->length, 0.0, 0.0, st->start_heading};
  }
  if (const auto* arc = std::get_if<Arc>(&segment)) {
    if (!std::isfinite(arc->radius) || arc->radius == 0.0) throw ConstructionError("arc radius must be nonzero");
    if (!(std::isfinite(arc->angle) && arc->angle > 0.0)) throw ConstructionError("arc angle must be > 0");
    const double k = 1.0 / arc->radius;
    return {std::abs(arc->radius) * arc->angle, k, k, arc->start_heading};
  }
  const auto& cl = std::get<Clothoid>(segment);
  if (!(std::isfinite(cl.length) && cl.length > 0.0)) throw ConstructionError("clothoid length must be > 0");
  if (!std::isfinite(cl.k0) || !std::isfinite(cl.k1)) throw ConstructionError("clothoid curvature must be finite");
  return {cl.length, cl.k0, cl.k1, cl.start_heading};
}

// Pose and curvature at distance u into a segment that starts at `p`.
PathPoint advance(const Pose& p, const SegmentGeometry& g, double u) {
  const double rate = (g.k1 - g.k0) / g.length;
  PathPoint out;
  out.curvature = g.k0 + rate * u;
  out.heading = p.heading + g.k0 * u + 0.5 * rate * u * u;
  if (rate == 0.0 && g.k0 == 0.0) {
    out.x = p.x + u * std::cos(p.heading);
    out.y = p.y + u * std::sin(p.heading);
  } else if (rate == 0.0) {
    out.x = p.x + (std::sin(out.heading) - std::sin(p.heading)) / g.k0;
    out.y = p.y - (std::cos(out.heading) - std::cos(p.heading)) / g.k0;
  } else {
    const int panels = std::max(1, static_cast<int>(std::ceil(u / 1.0)));
    const double h = u / panels;
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < panels; ++i) {
      const double mid = (i + 0.5) * h;
      for (std::size_t j = 0; j < kGlNodes.size(); ++j) {
        const double t = mid + 0.5 * h * kGlNodes[j];
        const double th = p.heading + g.k0 * t + 0.5 * rate * t * t;
        cx += kGlWeights[j] * std::cos(th);
        cy += kGlWeights[j] * std::sin(th);
      }
    }
    out.x = p.x + 0.5 * h * cx;
    out.y = p.y + 0.5 * h * cy;
  }
  return out;
}

void check_joint(const SegmentGeometry& g, double heading, std::size_t index) {
  if (g.start_heading && std::abs(wrap_angle(*g.start_heading - heading)) > kHeadingTolerance) {
    throw ConstructionError("tangent discontinuity at the start of segment " + std::to_string(index));
  }
}

}  // namespace

double wrap_angle(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle + std::numbers::pi, two_pi);
  if (a < 0.0) a += two_pi;
  return a - std::numbers::pi;
}

double segment_length(const Segment& segment) { return geometry(segment).length; }

Pose end_pose(const std::vector<Segment>& segments, Pose start) {
  Pose p = start;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const SegmentGeometry g = geometry(segments[i]);
    check_joint(g, p.heading, i);
    const PathPoint q = advance(p, g, g.length);
    p = {q.x, q.y, q.heading};
  }
  return p;
}

std::vector<PathPoint> build_path(const std::vector<Segment>& segments, double ds, Pose start) {
  if (!(std::isfinite(ds) && ds > 0.0)) throw ConstructionError("sampling step must be > 0");
  if (segments.empty()) throw ConstructionError("path needs at least one segment");
  std::vector<SegmentGeometry> geo;
  geo.reserve(segments.size());
  for (const auto& sgm : segments) geo.push_back(geometry(sgm));

  std::vector<PathPoint> points;
  Pose p = start;
  double s0 = 0.0;
  std::size_t next = 0;  // index of the next sample s = next * ds
  for (std::size_t i = 0; i < geo.size(); ++i) {
    const SegmentGeometry& g = geo[i];
    check_joint(g, p.heading, i);
    const double s1 = s0 + g.length;
    const bool last = (i + 1 == geo.size());
    for (;; ++next) {
      const double s = double(next) * ds;
      // Samples on a joint belong to the following segment.
      if (last ? s > s1 - 1e-9 : s >= s1) break;
      PathPoint q = advance(p, g, s - s0);
      q.s = s;
      points.push_back(q);
    }
    const PathPoint e = advance(p, g, g.length);
    if (last) {
      PathPoint q = e;
      q.s = s1;
      points.push_back(q);
    }
    p = {e.x, e.y, e.heading};
    s0 = s1;
  }
  return points;
}

}  // namespace latbench::trajectory
