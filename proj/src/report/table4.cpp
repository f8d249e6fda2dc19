#include "latbench/report/table4.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "latbench/error.hpp"
#include "latbench/numerics/random.hpp"
#include "latbench/report/csv.hpp"
#include "latbench/util/parallel.hpp"

namespace latbench::report {

namespace {

MetricQuad quad_of(const RunRecord& r) {
  if (!r.metrics) return {NAN, NAN, NAN, NAN};
  const auto& m = *r.metrics;
  return {m.iae, m.mle, m.m_epsilon.value_or(0.0), m.m_zeta.value_or(0.0)};
}

MetricQuad mean_of(const std::vector<MetricQuad>& qs) {
  MetricQuad out{};
  for (const auto& q : qs)
    for (std::size_t k = 0; k < 4; ++k) out[k] += q[k];
  for (auto& v : out) v /= static_cast<double>(qs.size());
  return out;
}

std::string family_of(const controllers::ControllerConfig& c) { return controllers::family_name(c.family()); }

}  // namespace

Table4 build_table4(const std::vector<controllers::ControllerConfig>& setups,
                    const std::vector<trajectory::Trajectory>& trajectories, const vehicle::VehicleParams& vehicle,
                    const Table4Options& options) {
  if (setups.empty() || trajectories.empty()) throw ArgumentError("table needs setups and trajectories");
  const std::size_t nt = trajectories.size();
  Table4 table;
  for (const auto& t : trajectories) table.trajectories.push_back(t.name);
  table.runs.resize(setups.size() * nt);

  util::parallel_for(table.runs.size(), options.jobs, [&](std::size_t k) {
    const std::size_t i = k / nt;
    const std::size_t j = k % nt;
    RunRecord& r = table.runs[k];
    r.setup = setups[i].label;
    r.trajectory = trajectories[j].name;
    controllers::SimOptions sim = options.sim;
    sim.seed = numerics::derive_seed(options.sim.seed, j);
    try {
      const auto start = std::chrono::steady_clock::now();
      auto log = controllers::run_closed_loop(trajectories[j], setups[i], vehicle, sim);
      if (options.timing)
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      r.ticks = log.ticks.size();
      r.metrics = metrics::compute_metrics(log, trajectories[j]);
      if (options.keep_logs) r.log = std::move(log);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  const auto& zone = options.zone;
  std::vector<Table4Row> group;
  auto flush = [&](const std::string& family) {
    if (group.empty()) return;
    Table4Row mean;
    mean.setup = family + "-mean";
    mean.mean_row = true;
    for (std::size_t j = 0; j < nt; ++j) {
      std::vector<MetricQuad> col;
      for (const auto& g : group) col.push_back(g.per_trajectory[j]);
      mean.per_trajectory.push_back(mean_of(col));
    }
    mean.mean = mean_of(mean.per_trajectory);
    for (auto& g : group) table.rows.push_back(std::move(g));
    table.rows.push_back(std::move(mean));
    group.clear();
  };

  std::string current;
  for (std::size_t i = 0; i < setups.size(); ++i) {
    const std::string family = family_of(setups[i]);
    if (family != current) flush(current);
    current = family;
    Table4Row row;
    row.setup = setups[i].label;
    for (std::size_t j = 0; j < nt; ++j) {
      const RunRecord& r = table.runs[i * nt + j];
      const MetricQuad q = quad_of(r);
      row.per_trajectory.push_back(q);
      const std::string at = "@" + r.trajectory;
      if (!r.error.empty()) {
        row.flags.push_back("error" + at);
        continue;
      }
      if (r.metrics->diverged) row.flags.push_back("diverged" + at);
      if (q[0] > zone.iae) row.flags.push_back("iae" + at);
      if (q[2] > zone.m_epsilon) row.flags.push_back("m_eps" + at);
      if (q[3] > zone.m_zeta) row.flags.push_back("m_zeta" + at);
    }
    row.mean = mean_of(row.per_trajectory);
    group.push_back(std::move(row));
  }
  flush(current);
  return table;
}

void write_table4_csv(std::ostream& out, const Table4& table, const std::string& comment) {
  if (!comment.empty()) out << comment << '\n';
  static const char* names[4] = {"IAE", "MLE", "M_eps", "M_zeta"};
  std::vector<std::string> header{"setup"};
  auto add = [&](const std::string& prefix) {
    for (const char* n : names) header.push_back(prefix + "_" + n);
  };
  for (const auto& t : table.trajectories) add(t);
  add("mean");
  header.emplace_back("flags");
  write_csv_row(out, header);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells{row.setup};
    for (const auto& q : row.per_trajectory)
      for (double v : q) cells.push_back(format_number(v));
    for (double v : row.mean) cells.push_back(format_number(v));
    std::string flags;
    for (const auto& f : row.flags) flags += (flags.empty() ? "" : ";") + f;
    cells.push_back(flags);
    write_csv_row(out, cells);
  }
}

std::vector<std::string> best_setups(const Table4& table) {
  std::vector<std::string> out;
  std::string best;
  double best_iae = 0.0;
  for (const auto& row : table.rows) {
    if (row.mean_row) {
      if (!best.empty()) out.push_back(best);
      best.clear();
      continue;
    }
    const double v = row.mean[0];
    if (!std::isnan(v) && (best.empty() || v < best_iae)) {
      best = row.setup;
      best_iae = v;
    }
  }
  return out;
}

}  // namespace latbench::report
