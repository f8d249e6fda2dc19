#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latbench::tuning {

struct ParameterRange {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  double initial_step = 0.25;  // parameter units (log10 units when log_scale)
  /// Search in log10 space; needs lower > 0.
  bool log_scale = false;
};

struct ParameterSpace {
  std::vector<ParameterRange> ranges;

  std::size_t size() const { return ranges.size(); }
  /// Throws ArgumentError when empty, non-finite or lower >= upper.
  void validate() const;
  /// Unit-cube coordinates of a parameter vector and back.
  std::vector<double> to_unit(std::span<const double> parameters) const;
  std::vector<double> from_unit(std::span<const double> unit) const;
  /// Initial mesh step of each coordinate in unit-cube units.
  std::vector<double> unit_steps() const;
};

/// a dominates b: no worse in every objective and strictly better in one.
bool dominates(std::span<const double> a, std::span<const double> b);

struct ArchiveEntry {
  std::vector<double> parameters;
  std::vector<double> objectives;
  std::optional<double> robustness_pct;
  std::size_t candidate = 0;  // evaluation index; canonical order and tie-break
};

/// Nondominated set. Entries stay sorted by candidate index.
class ParetoArchive {
 public:
  /// Keeps the entry unless an existing one dominates it or duplicates it
  /// exactly; removes entries the new one dominates. Entries with non-finite
  /// objectives are never kept.
  bool insert(ArchiveEntry entry);

  const std::vector<ArchiveEntry>& entries() const { return entries_; }
  std::vector<ArchiveEntry>& entries() { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// True when no entry dominates another.
  bool consistent() const;

 private:
  std::vector<ArchiveEntry> entries_;
};

using ObjectiveFunction = std::function<std::vector<double>(const std::vector<double>&)>;

struct SearchOptions {
  std::size_t budget = 500;  // objective evaluations, at least 50
  std::uint64_t seed = 1;
  /// Stop once every archive point's mesh is below this fraction of each range.
  double mesh_tolerance = 1e-3;
  unsigned jobs = 1;
  /// Latin-hypercube samples before polling; 0 selects 2n + 1.
  std::size_t initial_samples = 0;
  /// Extra starting points evaluated first (parameter units).
  std::vector<std::vector<double>> starts;
  /// Evaluation log rewritten after every batch when non-empty; an existing
  /// file with the same seed and space is replayed instead of re-evaluated.
  std::string checkpoint_path;
  /// Return early once this many evaluations exist (0 = never); used to
  /// emulate an interrupted campaign.
  std::size_t stop_after = 0;
};

struct SearchResult {
  ParetoArchive archive;
  std::size_t evaluations = 0;
  std::size_t replayed = 0;
  bool converged = false;    // mesh tolerance reached before the budget
  bool interrupted = false;  // stopped by stop_after
};

/// Direct multisearch: every archive point carries a mesh size; the point with
/// the coarsest mesh (then the most isolated, then the oldest) is polled along
/// +-e_i. A poll that adds a point to the archive keeps the mesh, an
/// unsuccessful one halves it. Results depend only on (space, options.seed,
/// budget), never on jobs.
SearchResult pareto_search(const ParameterSpace& space, const ObjectiveFunction& objective,
                           const SearchOptions& options);

}  // namespace latbench::tuning
