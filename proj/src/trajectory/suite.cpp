#include "latbench/trajectory/suite.hpp"

#include <cmath>
#include <numbers>

#include "latbench/error.hpp"

namespace latbench::trajectory {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

void append(std::vector<Segment>& out, const std::vector<Segment>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Curves and straights of each analog before the closing straight, which is
// sized so the total length matches the catalog.
std::vector<Segment> layout(const std::string& name) {
  std::vector<Segment> s;
  if (name == "T1") {
    // The long straight is where the gentle a_x limit lets it reach 35 km/h.
    s.push_back(Straight{20.0, std::nullopt});
    append(s, curve(30.0, 90 * kDeg, 10.0));
    s.push_back(Straight{145.0, std::nullopt});
    append(s, curve(25.0, 90 * kDeg, 10.0));
    s.push_back(Straight{20.0, std::nullopt});
    append(s, curve(-30.0, 90 * kDeg, 10.0));
    s.push_back(Straight{30.0, std::nullopt});
    append(s, curve(-40.0, 30 * kDeg, 10.0));
  } else if (name == "T2") {
    s.push_back(Straight{100.0, std::nullopt});
    append(s, curve(80.0, 90 * kDeg, 20.0));
    s.push_back(Straight{150.0, std::nullopt});
    append(s, curve(-60.0, 120 * kDeg, 20.0));
    s.push_back(Straight{120.0, std::nullopt});
    append(s, curve(100.0, 90 * kDeg, 20.0));
    s.push_back(Straight{200.0, std::nullopt});
    append(s, curve(70.0, 60 * kDeg, 20.0));
  } else if (name == "T3") {
    s.push_back(Straight{20.0, std::nullopt});
    append(s, curve(20.0, 90 * kDeg, 8.0));
    s.push_back(Straight{15.0, std::nullopt});
    append(s, curve(-20.0, 90 * kDeg, 8.0));
    s.push_back(Straight{15.0, std::nullopt});
    append(s, curve(18.0, 60 * kDeg, 8.0));
    s.push_back(Straight{10.0, std::nullopt});
    append(s, curve(-18.0, 60 * kDeg, 8.0));
  } else if (name == "T4") {
    s.push_back(Straight{25.0, std::nullopt});
    append(s, curve(25.0, 45 * kDeg, 10.0));
    append(s, curve(-25.0, 45 * kDeg, 10.0));
    s.push_back(Straight{10.0, std::nullopt});
    append(s, curve(400.0, 10 * kDeg, 20.0));
    s.push_back(Straight{30.0, std::nullopt});
    append(s, curve(-400.0, 10 * kDeg, 20.0));
  } else if (name == "T5") {
    s.push_back(Straight{300.0, std::nullopt});
    append(s, curve(80.0, 90 * kDeg, 30.0));
    s.push_back(Straight{250.0, std::nullopt});
    append(s, curve(-60.0, 90 * kDeg, 25.0));
    s.push_back(Straight{250.0, std::nullopt});
    append(s, curve(100.0, 120 * kDeg, 30.0));
    s.push_back(Straight{300.0, std::nullopt});
    append(s, curve(-70.0, 90 * kDeg, 25.0));
  } else if (name == "T6") {
    s.push_back(Straight{250.0, std::nullopt});
    append(s, curve(90.0, 90 * kDeg, 25.0));
    s.push_back(Straight{300.0, std::nullopt});
    append(s, curve(-80.0, 90 * kDeg, 25.0));
    s.push_back(Straight{250.0, std::nullopt});
    append(s, curve(120.0, 60 * kDeg, 25.0));
    s.push_back(Straight{250.0, std::nullopt});
    append(s, curve(-100.0, 90 * kDeg, 25.0));
  } else {
    throw ArgumentError("unknown benchmark trajectory '" + name + "'");
  }
  return s;
}

}  // namespace

const std::vector<SuiteEntry>& suite_catalog() {
  static const std::vector<SuiteEntry> catalog = {
      {"T1", "Quite", {35.0, 0.4, 0.7, 1.0}, 471.0, true, true},
      {"T2", "Moderate", {71.0, 1.0, 2.0, 2.0}, 1391.8, false, true},
      {"T3", "Aggressive-medium speed", {66.0, 2.2, 3.0, 4.0}, 354.3, false, true},
      {"T4", "High speed", {120.0, 2.5, 3.5, 4.0}, 500.0, false, true},
      {"T5", "Aggressive-high speed", {100.0, 1.5, 2.0, 4.0}, 2119.6, true, false},
      {"T6", "Moderate", {70.0, 2.0, 2.0, 2.0}, 1959.3, true, false},
  };
  return catalog;
}

const SuiteEntry& suite_entry(const std::string& name) {
  for (const auto& e : suite_catalog()) {
    if (e.name == name) return e;
  }
  throw ArgumentError("unknown benchmark trajectory '" + name + "'");
}

std::vector<Segment> curve(double radius, double turn, double transition) {
  if (radius == 0.0 || !(turn > 0.0) || !(transition > 0.0)) throw ConstructionError("invalid curve parameters");
  const double k = 1.0 / radius;
  const double arc_angle = turn - std::abs(k) * transition;
  if (!(arc_angle > 0.0)) throw ConstructionError("curve transitions consume the whole turn");
  return {Clothoid{0.0, k, transition, std::nullopt}, Arc{radius, arc_angle, std::nullopt},
          Clothoid{k, 0.0, transition, std::nullopt}};
}

Trajectory make_trajectory(const std::string& name, const std::vector<Segment>& segments,
                           const DrivingLimits& limits, const SpeedPlanOptions& options) {
  Trajectory t;
  t.name = name;
  t.path = build_path(segments, kSampleStep);
  t.limits = limits;
  t.speed = plan_speed_profile(t.path, limits, options);
  return t;
}

Trajectory benchmark_trajectory(const std::string& name) {
  const SuiteEntry& entry = suite_entry(name);
  std::vector<Segment> segs = layout(name);
  double used = 0.0;
  for (const auto& sg : segs) used += segment_length(sg);
  const double closing = entry.length - used;
  if (!(closing > 0.0)) throw ConstructionError("layout of " + name + " exceeds its catalog length");
  segs.push_back(Straight{closing, std::nullopt});
  Trajectory t = make_trajectory(name, segs, entry.limits);
  t.purpose = entry.purpose;
  t.used_for_tuning = entry.tuning;
  t.used_for_testing = entry.testing;
  return t;
}

std::vector<Trajectory> benchmark_suite() {
  std::vector<Trajectory> out;
  for (const auto& e : suite_catalog()) out.push_back(benchmark_trajectory(e.name));
  return out;
}

Trajectory straight_trajectory(double length, double speed) {
  if (!(speed > 0.0)) throw ArgumentError("straight trajectory speed must be > 0");
  DrivingLimits limits{speed * 3.6, 1.0, 1.0, 1.0};
  Trajectory t = make_trajectory("straight", {Straight{length, std::nullopt}}, limits, {speed, speed});
  t.purpose = "Regulation";
  return t;
}

}  // namespace latbench::trajectory
