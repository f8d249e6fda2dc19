#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "latbench/controllers/config.hpp"
#include "latbench/tuning/evaluate.hpp"
#include "latbench/tuning/pareto.hpp"
#include "latbench/tuning/robustness.hpp"
#include "latbench/tuning/selection.hpp"

namespace latbench::tuning {

/// Evaluations per family that add up to the published campaign size
/// (217 400 simulations over five families and three tuning trajectories).
inline constexpr std::size_t kPaperScaleBudget = 14493;

struct CampaignConfig {
  controllers::Family family = controllers::Family::kPid;
  ParameterSpace space;
  std::size_t budget = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> trajectories{"T1", "T5", "T6"};
  std::size_t robustness_draws = 200;
  std::string robustness_trajectory = "T5";
  /// Seed the search with the three published setups of the family.
  bool published_starts = true;
};

/// {family, budget, seed, trajectories, space, robustness{draws, trajectory},
/// published_starts, paper_scale}. Only "family" is required. "space" maps
/// parameter names to {lower, upper, step, log}; omitted parameters and keys
/// keep the family defaults. paper_scale = true replaces the budget with
/// kPaperScaleBudget. Throws ConfigError naming the offending field.
CampaignConfig campaign_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const CampaignConfig& config);
CampaignConfig load_campaign_config(const std::string& path);

/// Tuning trajectories and nominal vehicle; the noise seed is the campaign seed.
EvaluationContext campaign_context(const CampaignConfig& config);

struct TuningOptions {
  unsigned jobs = 1;
  std::string checkpoint_path;
  std::size_t stop_after = 0;
};

SearchResult run_tuning(const CampaignConfig& config, const TuningOptions& options = {});

/// Monte Carlo screen of the work-zone entries; other entries keep no score.
/// Every entry shares the campaign seed so scores are comparable.
void annotate_robustness(std::vector<ArchiveEntry>& entries, const CampaignConfig& config, unsigned jobs = 1,
                         const WorkZone& zone = {});

/// Columns: candidate, the family's parameter names, max_iae, max_m_epsilon,
/// max_m_zeta, robustness_pct (empty when not screened).
void write_archive_csv(std::ostream& out, controllers::Family family, const std::vector<ArchiveEntry>& entries,
                       const std::string& comment = {});
void write_archive_csv_file(const std::string& path, controllers::Family family,
                            const std::vector<ArchiveEntry>& entries, const std::string& comment = {});
std::vector<ArchiveEntry> read_archive_csv(std::istream& in, controllers::Family family);
std::vector<ArchiveEntry> read_archive_csv_file(const std::string& path, controllers::Family family);

}  // namespace latbench::tuning
