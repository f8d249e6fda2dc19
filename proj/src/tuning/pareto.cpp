#include "latbench/tuning/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>

#include "json.hpp"
#include "latbench/error.hpp"
#include "latbench/numerics/random.hpp"
#include "latbench/util/parallel.hpp"

namespace latbench::tuning {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

struct Evaluation {
  std::vector<double> parameters;
  std::vector<double> objectives;
};

nlohmann::json space_json(const ParameterSpace& space) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : space.ranges) {
    out.push_back({{"name", r.name}, {"lower", r.lower}, {"upper", r.upper},
                   {"initial_step", r.initial_step}, {"log_scale", r.log_scale}});
  }
  return out;
}

nlohmann::json numbers_json(const std::vector<double>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (double x : v) {
    if (std::isfinite(x)) out.push_back(x);
    else out.push_back(nullptr);  // the only non-finite value produced is +inf
  }
  return out;
}

std::vector<double> numbers_from_json(const nlohmann::json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(x.is_null() ? kInf : x.get<double>());
  return out;
}

void write_checkpoint(const std::string& path, const ParameterSpace& space, std::uint64_t seed,
                      const std::vector<Evaluation>& log) {
  nlohmann::json doc;
  doc["seed"] = seed;
  doc["space"] = space_json(space);
  nlohmann::json evals = nlohmann::json::array();
  for (const auto& e : log) evals.push_back({{"p", numbers_json(e.parameters)}, {"f", numbers_json(e.objectives)}});
  doc["evaluations"] = std::move(evals);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ConfigError("checkpoint", "cannot write " + tmp);
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::vector<Evaluation> read_checkpoint(const std::string& path, const ParameterSpace& space,
                                        std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) return {};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("checkpoint", std::string("unreadable checkpoint: ") + e.what());
  }
  if (doc.value("seed", std::uint64_t{0}) != seed || doc.value("space", nlohmann::json()) != space_json(space)) {
    throw ConfigError("checkpoint", "checkpoint " + path + " belongs to a different search");
  }
  std::vector<Evaluation> out;
  for (const auto& e : doc.at("evaluations")) out.push_back({numbers_from_json(e.at("p")), numbers_from_json(e.at("f"))});
  return out;
}

std::vector<std::int64_t> unit_key(const std::vector<double>& u) {
  std::vector<std::int64_t> key(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) key[i] = std::llround(u[i] * 1099511627776.0);  // 2^40
  return key;
}

std::vector<std::vector<double>> latin_hypercube(std::size_t n, std::size_t dim, numerics::RandomStream& rng) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  std::vector<std::size_t> perm(n);
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.uniform01() * double(i));
      std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
    }
    for (std::size_t i = 0; i < n; ++i) pts[i][d] = (double(perm[i]) + rng.uniform01()) / double(n);
  }
  return pts;
}

/// Distance to the nearest other entry in range-normalized objective space.
std::vector<double> isolation(const std::vector<ArchiveEntry>& entries) {
  const std::size_t n = entries.size();
  std::vector<double> out(n, kInf);
  if (n < 2) return out;
  const std::size_t m = entries.front().objectives.size();
  std::vector<double> lo(m, kInf), hi(m, -kInf);
  for (const auto& e : entries) {
    for (std::size_t k = 0; k < m; ++k) {
      lo[k] = std::min(lo[k], e.objectives[k]);
      hi[k] = std::max(hi[k], e.objectives[k]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d2 = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double span = hi[k] > lo[k] ? hi[k] - lo[k] : 1.0;
        const double d = (entries[i].objectives[k] - entries[j].objectives[k]) / span;
        d2 += d * d;
      }
      out[i] = std::min(out[i], std::sqrt(d2));
    }
  }
  return out;
}

}  // namespace

void ParameterSpace::validate() const {
  if (ranges.empty()) throw ArgumentError("parameter space is empty");
  for (const auto& r : ranges) {
    if (!std::isfinite(r.lower) || !std::isfinite(r.upper) || !(r.lower < r.upper)) {
      throw ArgumentError("parameter " + r.name + ": bounds must be finite with lower < upper");
    }
    if (!(r.initial_step > 0.0) || !std::isfinite(r.initial_step)) {
      throw ArgumentError("parameter " + r.name + ": initial step must be > 0");
    }
    if (r.log_scale && !(r.lower > 0.0)) throw ArgumentError("parameter " + r.name + ": log scale needs lower > 0");
  }
}

std::vector<double> ParameterSpace::to_unit(std::span<const double> p) const {
  if (p.size() != ranges.size()) throw ArgumentError("parameter vector has the wrong length");
  std::vector<double> u(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& r = ranges[i];
    const double x = std::clamp(p[i], r.lower, r.upper);
    u[i] = r.log_scale ? std::log10(x / r.lower) / std::log10(r.upper / r.lower) : (x - r.lower) / (r.upper - r.lower);
  }
  return u;
}

std::vector<double> ParameterSpace::from_unit(std::span<const double> u) const {
  if (u.size() != ranges.size()) throw ArgumentError("unit vector has the wrong length");
  std::vector<double> p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& r = ranges[i];
    const double t = std::clamp(u[i], 0.0, 1.0);
    p[i] = r.log_scale ? r.lower * std::pow(r.upper / r.lower, t) : r.lower + t * (r.upper - r.lower);
  }
  return p;
}

std::vector<double> ParameterSpace::unit_steps() const {
  std::vector<double> s(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& r = ranges[i];
    const double width = r.log_scale ? std::log10(r.upper / r.lower) : r.upper - r.lower;
    s[i] = std::min(1.0, r.initial_step / width);
  }
  return s;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("objective vectors differ in length");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] <= b[i])) return false;  // NaN never dominates nor is dominated
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

bool ParetoArchive::insert(ArchiveEntry entry) {
  if (!all_finite(entry.objectives)) return false;
  for (const auto& e : entries_) {
    if (dominates(e.objectives, entry.objectives)) return false;
    if (e.objectives == entry.objectives && e.parameters == entry.parameters) return false;
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(entry.objectives, e.objectives); });
  const auto pos = std::upper_bound(entries_.begin(), entries_.end(), entry.candidate,
                                    [](std::size_t c, const ArchiveEntry& e) { return c < e.candidate; });
  entries_.insert(pos, std::move(entry));
  return true;
}

bool ParetoArchive::consistent() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (i != j && dominates(entries_[i].objectives, entries_[j].objectives)) return false;
    }
  }
  return true;
}

SearchResult pareto_search(const ParameterSpace& space, const ObjectiveFunction& objective,
                           const SearchOptions& options) {
  space.validate();
  if (options.budget < 50) throw ArgumentError("search budget must be >= 50");
  if (!(options.mesh_tolerance > 0.0)) throw ArgumentError("mesh tolerance must be > 0");
  const std::size_t dim = space.size();
  const std::vector<double> steps = space.unit_steps();
  const double max_step = *std::max_element(steps.begin(), steps.end());

  std::vector<Evaluation> replay;
  if (!options.checkpoint_path.empty()) replay = read_checkpoint(options.checkpoint_path, space, options.seed);

  SearchResult result;
  std::vector<Evaluation> log;
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  std::map<std::size_t, double> mesh;  // candidate -> mesh multiplier
  numerics::RandomStream rng(options.seed);
  const std::size_t limit = options.stop_after > 0 ? std::min(options.budget, options.stop_after) : options.budget;

  // Evaluates the new points of a batch (in order, up to the limit) and
  // returns the candidates that entered the archive.
  auto run_batch = [&](const std::vector<std::vector<double>>& unit_points, double alpha) {
    std::vector<std::vector<double>> fresh;
    for (const auto& u : unit_points) {
      if (log.size() + fresh.size() >= limit) break;
      if (seen.emplace(unit_key(u), log.size() + fresh.size()).second) fresh.push_back(u);
    }
    std::vector<Evaluation> evals(fresh.size());
    const std::size_t base = log.size();
    util::parallel_for(fresh.size(), std::max(1u, options.jobs), [&](std::size_t i) {
      evals[i].parameters = space.from_unit(fresh[i]);
      if (base + i < replay.size()) {
        if (replay[base + i].parameters != evals[i].parameters) {
          throw ConfigError("checkpoint", "checkpoint does not match the resumed search");
        }
        evals[i].objectives = replay[base + i].objectives;
      } else {
        evals[i].objectives = objective(evals[i].parameters);
      }
    });
    std::vector<std::size_t> added;
    for (auto& e : evals) {
      const std::size_t candidate = log.size();
      if (candidate < replay.size()) ++result.replayed;
      log.push_back(e);
      if (result.archive.insert({e.parameters, e.objectives, std::nullopt, candidate})) {
        mesh[candidate] = alpha;
        added.push_back(candidate);
      }
    }
    if (!options.checkpoint_path.empty() && !evals.empty()) {
      write_checkpoint(options.checkpoint_path, space, options.seed, log);
    }
    return added;
  };

  std::vector<std::vector<double>> initial;
  for (const auto& s : options.starts) initial.push_back(space.to_unit(s));
  const std::size_t n0 = options.initial_samples > 0 ? options.initial_samples : 2 * dim + 1;
  for (auto& u : latin_hypercube(n0, dim, rng)) initial.push_back(std::move(u));
  run_batch(initial, 1.0);

  std::map<std::size_t, int> polls;
  while (log.size() < limit) {
    if (result.archive.empty()) {
      // Nothing feasible yet: keep sampling.
      run_batch(latin_hypercube(n0, dim, rng), 1.0);
      continue;
    }
    const auto& entries = result.archive.entries();
    const std::vector<double> iso = isolation(entries);
    std::size_t best = entries.size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const double a = mesh[entries[i].candidate];
      if (a * max_step < options.mesh_tolerance) continue;
      if (best == entries.size()) {
        best = i;
        continue;
      }
      const double b = mesh[entries[best].candidate];
      const int pi = polls[entries[i].candidate];
      const int pb = polls[entries[best].candidate];
      if (a > b || (a == b && (iso[i] > iso[best] || (iso[i] == iso[best] && pi < pb)))) best = i;
    }
    if (best == entries.size()) {
      result.converged = true;
      break;
    }
    const std::size_t center = entries[best].candidate;
    const double alpha = mesh[center];
    const std::vector<double> u0 = space.to_unit(entries[best].parameters);
    ++polls[center];

    std::vector<std::vector<double>> poll;
    for (std::size_t i = 0; i < dim; ++i) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> u = u0;
        u[i] = std::clamp(u[i] + sign * alpha * steps[i], 0.0, 1.0);
        if (u[i] != u0[i]) poll.push_back(std::move(u));
      }
    }
    // Poll points evaluated before count as failures, so the mesh still contracts.
    if (run_batch(poll, alpha).empty()) mesh[center] = alpha * 0.5;
  }
  result.evaluations = log.size();
  result.interrupted = options.stop_after > 0 && log.size() >= options.stop_after && log.size() < options.budget &&
                       !result.converged;
  return result;
}

}  // namespace latbench::tuning
