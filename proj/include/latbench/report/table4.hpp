#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latbench/controllers/closed_loop.hpp"
#include "latbench/controllers/config.hpp"
#include "latbench/metrics/metrics.hpp"
#include "latbench/trajectory/trajectory.hpp"
#include "latbench/tuning/selection.hpp"
#include "latbench/vehicle/params.hpp"

namespace latbench::report {

/// IAE, MLE, M_eps, M_zeta; indicators without a qualifying section count as 0.
using MetricQuad = std::array<double, 4>;

struct RunRecord {
  std::string setup;
  std::string trajectory;
  std::optional<controllers::SimLog> log;  // kept only on request
  std::optional<metrics::MetricsReport> metrics;
  std::string error;  // exception text when the run crashed
  std::size_t ticks = 0;
  double wall_seconds = 0.0;  // measured only with Table4Options::timing
};

struct Table4Row {
  std::string setup;  // "LQR-1", or "LQR-mean" for a family mean row
  bool mean_row = false;
  std::vector<MetricQuad> per_trajectory;
  MetricQuad mean{};
  /// Work-zone violations and failed runs, e.g. "iae@T3", "diverged@T2".
  std::vector<std::string> flags;
};

struct Table4 {
  std::vector<std::string> trajectories;
  std::vector<Table4Row> rows;
  std::vector<RunRecord> runs;  // setup-major order
};

struct Table4Options {
  unsigned jobs = 1;
  /// Every setup sees the noise stream derive_seed(sim.seed, trajectory index).
  controllers::SimOptions sim;
  tuning::WorkZone zone;
  bool keep_logs = false;
  bool timing = false;
};

/// Runs every setup on every trajectory. Consecutive setups of one family are
/// followed by a "<FAMILY>-mean" row of their arithmetic means. A crashed run
/// yields NaN cells and a flag; the table is still complete.
Table4 build_table4(const std::vector<controllers::ControllerConfig>& setups,
                    const std::vector<trajectory::Trajectory>& trajectories, const vehicle::VehicleParams& vehicle,
                    const Table4Options& options = {});

/// Columns: setup, <T>_IAE, <T>_MLE, <T>_M_eps, <T>_M_zeta per trajectory, the
/// same four for "mean", then flags (';' separated).
void write_table4_csv(std::ostream& out, const Table4& table, const std::string& comment = {});

/// Setup with the lowest mean IAE of each family (ties to the earlier row).
std::vector<std::string> best_setups(const Table4& table);

}  // namespace latbench::report
