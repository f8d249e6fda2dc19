#include "latbench/trajectory/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "latbench/error.hpp"
#include "latbench/report/csv.hpp"

namespace latbench::trajectory {

using report::format_number;

void write_trajectory_csv(std::ostream& out, const Trajectory& t, const std::string& comment) {
  if (t.speed.size() != t.path.size()) throw ArgumentError("trajectory speed profile size mismatch");
  if (!comment.empty()) out << comment << '\n';
  out << "s,x,y,heading,curvature,speed\n";
  for (std::size_t i = 0; i < t.path.size(); ++i) {
    const auto& p = t.path[i];
    report::write_csv_row(out, {format_number(p.s), format_number(p.x), format_number(p.y),
                                format_number(p.heading), format_number(p.curvature), format_number(t.speed[i])});
  }
}

void write_trajectory_csv_file(const std::string& path, const Trajectory& t, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  write_trajectory_csv(out, t, comment);
}

Trajectory read_trajectory_csv(std::istream& in, const std::string& name, const DrivingLimits& limits) {
  const report::CsvTable table = report::read_csv(in);
  const char* cols[] = {"s", "x", "y", "heading", "curvature", "speed"};
  std::vector<std::vector<double>> data;
  for (const char* c : cols) {
    try {
      data.push_back(table.numeric_column(c));
    } catch (const ArgumentError& e) {
      throw ConfigError(c, e.what());
    }
  }
  Trajectory t;
  t.name = name;
  t.limits = limits;
  const std::size_t n = data[0].size();
  if (n < 2) throw ConfigError("s", "trajectory needs at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& col : data) {
      if (!std::isfinite(col[i])) throw ConfigError("row " + std::to_string(i + 1), "non-finite value");
    }
    if (i > 0 && !(data[0][i] > data[0][i - 1])) throw ConfigError("s", "arclength must be strictly increasing");
    t.path.push_back({data[0][i], data[1][i], data[2][i], data[3][i], data[4][i]});
    if (data[5][i] < 0.0) throw ConfigError("speed", "must be >= 0");
    t.speed.push_back(data[5][i]);
  }
  return t;
}

Trajectory read_trajectory_csv_file(const std::string& path, const DrivingLimits& limits) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open trajectory file");
  return read_trajectory_csv(in, std::filesystem::path(path).stem().string(), limits);
}

nlohmann::json limits_to_json(const DrivingLimits& l) {
  return {{"v_max", l.v_max_kmh}, {"a_x_max", l.a_x_max}, {"a_x_min", l.a_x_min}, {"a_y_max", l.a_y_max}};
}

DrivingLimits limits_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("limits", "must be an object");
  DrivingLimits l;
  auto get = [&](const char* key, double& dst) {
    if (!doc.contains(key)) throw ConfigError(std::string("limits.") + key, "missing");
    if (!doc[key].is_number()) throw ConfigError(std::string("limits.") + key, "must be a number");
    dst = doc[key].get<double>();
  };
  get("v_max", l.v_max_kmh);
  get("a_x_max", l.a_x_max);
  get("a_x_min", l.a_x_min);
  get("a_y_max", l.a_y_max);
  l.validate();
  return l;
}

nlohmann::json suite_manifest(const std::vector<Trajectory>& trajectories) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& t : trajectories) {
    std::string usage;
    if (t.used_for_tuning) usage += "O";
    if (t.used_for_tuning && t.used_for_testing) usage += "/";
    if (t.used_for_testing) usage += "T";
    list.push_back({{"name", t.name},
                    {"file", t.name + ".csv"},
                    {"purpose", t.purpose},
                    {"usage", usage},
                    {"length", t.length()},
                    {"limits", limits_to_json(t.limits)}});
  }
  return {{"trajectories", list}};
}

}  // namespace latbench::trajectory
