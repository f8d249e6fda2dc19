#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "latbench/tuning/pareto.hpp"

namespace latbench::tuning {

/// Assumable limits; boundaries are inside the zone.
struct WorkZone {
  double iae = 0.35;
  double m_epsilon = 0.25;
  double m_zeta = 0.7;
};

/// objectives = (IAE, M_eps, M_zeta).
bool in_work_zone(const std::vector<double>& objectives, const WorkZone& zone = {});
ParetoArchive workzone_filter(const ParetoArchive& archive, const WorkZone& zone = {});

struct SelectionOptions {
  WorkZone zone;
  double min_robustness_pct = 90.0;
  std::size_t group = 5;
};

struct Selection {
  /// Positions in the input entries of setups 1, 2 and 3.
  std::array<std::size_t, 3> index{};
  std::array<ArchiveEntry, 3> setups;
};

/// Eligible points are inside the work zone with a robustness score of at
/// least min_robustness_pct. With N eligible points the groups hold the
/// k = min(group, N/2) lowest and highest IAE values (ties included). Setup 1
/// and 3 minimize M_eps in those groups; setup 2 is the point with IAE strictly
/// between them (setups 1 and 3 included only when none exists) whose direction
/// is closest to the bisector of setups 1 and 3, all in zone-normalized
/// coordinates. Ties go to the lowest candidate index.
/// Throws SelectionError with fewer than two eligible points.
Selection select_setups(const std::vector<ArchiveEntry>& entries, const SelectionOptions& options = {});

}  // namespace latbench::tuning
