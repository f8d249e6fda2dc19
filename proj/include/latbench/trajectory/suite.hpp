#pragma once

#include <string>
#include <vector>

#include "latbench/trajectory/trajectory.hpp"

namespace latbench::trajectory {

inline constexpr double kSampleStep = 0.5;

struct SuiteEntry {
  std::string name;
  std::string purpose;
  DrivingLimits limits;
  double length = 0.0;
  bool tuning = false;
  bool testing = false;
};

/// Names, purposes, limits and lengths of the six benchmark trajectories.
const std::vector<SuiteEntry>& suite_catalog();

/// Entry for "T1".."T6"; throws ArgumentError for an unknown name.
const SuiteEntry& suite_entry(const std::string& name);

/// Synthesized benchmark analogs T1..T6 with planned speed profiles.
std::vector<Trajectory> benchmark_suite();
Trajectory benchmark_trajectory(const std::string& name);

/// Straight line along +x driven at a constant planned speed.
Trajectory straight_trajectory(double length, double speed);

/// Builds a trajectory from segments and limits with the standard sample step.
Trajectory make_trajectory(const std::string& name, const std::vector<Segment>& segments,
                           const DrivingLimits& limits, const SpeedPlanOptions& options = {});

/// Clothoid-in, arc, clothoid-out with total heading change `turn` (rad, sign from radius).
std::vector<Segment> curve(double radius, double turn, double transition);

}  // namespace latbench::trajectory
