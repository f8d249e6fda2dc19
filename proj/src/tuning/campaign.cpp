#include "latbench/tuning/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "latbench/controllers/setups.hpp"
#include "latbench/error.hpp"
#include "latbench/report/csv.hpp"
#include "latbench/trajectory/suite.hpp"
#include "latbench/util/parallel.hpp"

namespace latbench::tuning {

using controllers::Family;
using nlohmann::json;

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field, what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& item : obj.items()) require(allowed.count(item.key()) > 0, prefix + item.key(), "unknown field");
}

double number(const json& obj, const std::string& key, const std::string& field) {
  require(obj.at(key).is_number(), field, "must be a number");
  const double v = obj.at(key).get<double>();
  require(std::isfinite(v), field, "must be finite");
  return v;
}

std::size_t count(const json& obj, const std::string& key, std::size_t minimum) {
  require(obj.at(key).is_number_integer() && obj.at(key).get<long long>() >= static_cast<long long>(minimum), key,
          "must be an integer >= " + std::to_string(minimum));
  return obj.at(key).get<std::size_t>();
}

void apply_range(ParameterRange& r, const json& doc, const std::string& prefix) {
  require(doc.is_object(), prefix, "must be an object");
  reject_unknown(doc, {"lower", "upper", "step", "log"}, prefix + ".");
  if (doc.contains("lower")) r.lower = number(doc, "lower", prefix + ".lower");
  if (doc.contains("upper")) r.upper = number(doc, "upper", prefix + ".upper");
  if (doc.contains("log")) {
    require(doc.at("log").is_boolean(), prefix + ".log", "must be a boolean");
    r.log_scale = doc.at("log").get<bool>();
  }
  require(r.lower < r.upper, prefix, "lower must be below upper");
  require(!r.log_scale || r.lower > 0.0, prefix + ".lower", "must be > 0 on a log axis");
  if (doc.contains("step")) {
    r.initial_step = number(doc, "step", prefix + ".step");
    require(r.initial_step > 0.0, prefix + ".step", "must be > 0");
  } else {
    r.initial_step = 0.25 * (r.log_scale ? std::log10(r.upper / r.lower) : r.upper - r.lower);
  }
}

}  // namespace

CampaignConfig campaign_from_json(const json& doc) {
  require(doc.is_object(), "<root>", "campaign config must be a JSON object");
  reject_unknown(doc, {"family", "budget", "seed", "trajectories", "space", "robustness", "published_starts",
                       "paper_scale"},
                 "");
  CampaignConfig c;
  require(doc.contains("family"), "family", "missing");
  require(doc.at("family").is_string(), "family", "must be a string");
  try {
    c.family = controllers::parse_family(doc.at("family").get<std::string>());
  } catch (const Error& e) {
    throw ConfigError("family", e.what());
  }
  c.space = default_parameter_space(c.family);

  if (doc.contains("budget")) c.budget = count(doc, "budget", 50);
  if (doc.contains("paper_scale")) {
    require(doc.at("paper_scale").is_boolean(), "paper_scale", "must be a boolean");
    if (doc.at("paper_scale").get<bool>()) c.budget = kPaperScaleBudget;
  }
  if (doc.contains("seed")) {
    const auto& seed = doc.at("seed");
    require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0), "seed", "must be a non-negative integer");
    c.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("trajectories")) {
    const auto& t = doc.at("trajectories");
    require(t.is_array() && !t.empty(), "trajectories", "must be a non-empty array");
    c.trajectories.clear();
    for (const auto& name : t) {
      require(name.is_string(), "trajectories", "entries must be strings");
      try {
        trajectory::suite_entry(name.get<std::string>());
      } catch (const Error&) {
        throw ConfigError("trajectories", "unknown trajectory '" + name.get<std::string>() + "'");
      }
      c.trajectories.push_back(name.get<std::string>());
    }
  }
  if (doc.contains("space")) {
    const auto& s = doc.at("space");
    require(s.is_object(), "space", "must be an object");
    for (const auto& item : s.items()) {
      auto it = std::find_if(c.space.ranges.begin(), c.space.ranges.end(),
                             [&](const ParameterRange& r) { return r.name == item.key(); });
      require(it != c.space.ranges.end(), "space." + item.key(), "not a parameter of this family");
      apply_range(*it, item.value(), "space." + item.key());
    }
  }
  if (doc.contains("robustness")) {
    const auto& r = doc.at("robustness");
    require(r.is_object(), "robustness", "must be an object");
    reject_unknown(r, {"draws", "trajectory"}, "robustness.");
    if (r.contains("draws")) {
      require(r.at("draws").is_number_integer() && r.at("draws").get<long long>() >= 1, "robustness.draws",
              "must be an integer >= 1");
      c.robustness_draws = r.at("draws").get<std::size_t>();
    }
    if (r.contains("trajectory")) {
      require(r.at("trajectory").is_string(), "robustness.trajectory", "must be a string");
      c.robustness_trajectory = r.at("trajectory").get<std::string>();
      try {
        trajectory::suite_entry(c.robustness_trajectory);
      } catch (const Error&) {
        throw ConfigError("robustness.trajectory", "unknown trajectory '" + c.robustness_trajectory + "'");
      }
    }
  }
  if (doc.contains("published_starts")) {
    require(doc.at("published_starts").is_boolean(), "published_starts", "must be a boolean");
    c.published_starts = doc.at("published_starts").get<bool>();
  }
  return c;
}

json to_json(const CampaignConfig& c) {
  json space = json::object();
  for (const auto& r : c.space.ranges)
    space[r.name] = {{"lower", r.lower}, {"upper", r.upper}, {"step", r.initial_step}, {"log", r.log_scale}};
  return {{"family", controllers::family_name(c.family)},
          {"budget", c.budget},
          {"seed", c.seed},
          {"trajectories", c.trajectories},
          {"space", space},
          {"robustness", {{"draws", c.robustness_draws}, {"trajectory", c.robustness_trajectory}}},
          {"published_starts", c.published_starts}};
}

CampaignConfig load_campaign_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open campaign config");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError(path, e.what());
  }
  return campaign_from_json(doc);
}

EvaluationContext campaign_context(const CampaignConfig& config) {
  EvaluationContext c;
  for (const auto& name : config.trajectories) c.trajectories.push_back(trajectory::benchmark_trajectory(name));
  c.sim.seed = config.seed;
  return c;
}

SearchResult run_tuning(const CampaignConfig& config, const TuningOptions& options) {
  config.space.validate();
  const EvaluationContext context = campaign_context(config);
  SearchOptions so;
  so.budget = config.budget;
  so.seed = config.seed;
  so.jobs = options.jobs;
  so.checkpoint_path = options.checkpoint_path;
  so.stop_after = options.stop_after;
  if (config.published_starts) {
    for (int i = 1; i <= 3; ++i)
      so.starts.push_back(controllers::parameter_vector(controllers::published_setup(config.family, i)));
  }
  return pareto_search(config.space, candidate_objective(config.family, context), so);
}

void annotate_robustness(std::vector<ArchiveEntry>& entries, const CampaignConfig& config, unsigned jobs,
                         const WorkZone& zone) {
  const auto traj = trajectory::benchmark_trajectory(config.robustness_trajectory);
  const vehicle::VehicleParams nominal;
  std::vector<std::size_t> screened;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].robustness_pct.reset();
    if (in_work_zone(entries[i].objectives, zone)) screened.push_back(i);
  }
  // Parallel over entries; each screen runs its draws serially.
  util::parallel_for(screened.size(), jobs, [&](std::size_t k) {
    auto& e = entries[screened[k]];
    RobustnessOptions ro;
    ro.draws = config.robustness_draws;
    ro.seed = config.seed;
    const auto r = monte_carlo_robustness(controllers::config_from_vector(config.family, e.parameters), traj,
                                          nominal, ro);
    e.robustness_pct = r.success_pct;
  });
}

void write_archive_csv(std::ostream& out, Family family, const std::vector<ArchiveEntry>& entries,
                       const std::string& comment) {
  if (!comment.empty()) out << comment << '\n';
  const auto& names = controllers::parameter_names(family);
  std::vector<std::string> header{"candidate"};
  header.insert(header.end(), names.begin(), names.end());
  for (const char* h : {"max_iae", "max_m_epsilon", "max_m_zeta", "robustness_pct"}) header.emplace_back(h);
  report::write_csv_row(out, header);
  for (const auto& e : entries) {
    if (e.parameters.size() != names.size() || e.objectives.size() != 3)
      throw ArgumentError("archive entry does not match the family's parameter layout");
    std::vector<std::string> row{std::to_string(e.candidate)};
    for (double p : e.parameters) row.push_back(report::format_number(p));
    for (double f : e.objectives) row.push_back(report::format_number(f));
    row.push_back(report::format_optional(e.robustness_pct));
    report::write_csv_row(out, row);
  }
}

void write_archive_csv_file(const std::string& path, Family family, const std::vector<ArchiveEntry>& entries,
                            const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_archive_csv(out, family, entries, comment);
}

std::vector<ArchiveEntry> read_archive_csv(std::istream& in, Family family) {
  const auto table = report::read_csv(in);
  const auto& names = controllers::parameter_names(family);
  const std::size_t cand = table.column("candidate");
  std::vector<std::size_t> pcols;
  for (const auto& n : names) pcols.push_back(table.column(n));
  std::vector<std::size_t> fcols;
  for (const char* h : {"max_iae", "max_m_epsilon", "max_m_zeta"}) fcols.push_back(table.column(h));
  const std::size_t rcol = table.column("robustness_pct");

  std::vector<ArchiveEntry> out;
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw ConfigError("archive", "row width does not match the header");
    ArchiveEntry e;
    try {
      e.candidate = std::stoull(row[cand]);
    } catch (const std::exception&) {
      throw ConfigError("candidate", "not an integer: '" + row[cand] + "'");
    }
    for (std::size_t c : pcols) {
      const auto v = report::parse_number(row[c]);
      if (!v) throw ConfigError(table.header[c], "empty parameter cell");
      e.parameters.push_back(*v);
    }
    for (std::size_t c : fcols) {
      const auto v = report::parse_number(row[c]);
      if (!v) throw ConfigError(table.header[c], "empty objective cell");
      e.objectives.push_back(*v);
    }
    e.robustness_pct = report::parse_number(row[rcol]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ArchiveEntry> read_archive_csv_file(const std::string& path, Family family) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open archive");
  return read_archive_csv(in, family);
}

}  // namespace latbench::tuning
