#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "latbench/trajectory/trajectory.hpp"

namespace latbench::trajectory {

/// Columns s,x,y,heading,curvature,speed; an optional leading '#' comment line.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, const std::string& comment = {});
void write_trajectory_csv_file(const std::string& path, const Trajectory& trajectory,
                               const std::string& comment = {});

/// Limits and labels are not stored in the CSV; callers supply them.
Trajectory read_trajectory_csv(std::istream& in, const std::string& name, const DrivingLimits& limits);
Trajectory read_trajectory_csv_file(const std::string& path, const DrivingLimits& limits);

nlohmann::json limits_to_json(const DrivingLimits& limits);
DrivingLimits limits_from_json(const nlohmann::json& doc);

/// Suite manifest: {"trajectories": [{name, file, purpose, usage, length, limits}]}.
nlohmann::json suite_manifest(const std::vector<Trajectory>& trajectories);

}  // namespace latbench::trajectory
