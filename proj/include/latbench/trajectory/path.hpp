#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace latbench::trajectory {

struct PathPoint {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double curvature = 0.0;  // positive turns left
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

/// start_heading, when given, must equal the running heading at the joint.
struct Straight {
  double length = 0.0;
  std::optional<double> start_heading;
};

/// Signed radius (positive turns left) and a positive swept angle in rad.
struct Arc {
  double radius = 0.0;
  double angle = 0.0;
  std::optional<double> start_heading;
};

/// Curvature varies linearly from k0 to k1 over length.
struct Clothoid {
  double k0 = 0.0;
  double k1 = 0.0;
  double length = 0.0;
  std::optional<double> start_heading;
};

using Segment = std::variant<Straight, Arc, Clothoid>;

double segment_length(const Segment& segment);

/// Samples the tangent-continuous path at arclength step ds; the end point is
/// always included. Throws ConstructionError on invalid segments or a heading
/// mismatch at a joint.
std::vector<PathPoint> build_path(const std::vector<Segment>& segments, double ds, Pose start = {});

/// Pose reached after the listed segments from `start`.
Pose end_pose(const std::vector<Segment>& segments, Pose start = {});

double wrap_angle(double angle);

}  // namespace latbench::trajectory
