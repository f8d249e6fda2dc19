#include "latbench/tuning/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latbench/error.hpp"
#include "latbench/metrics/metrics.hpp"
#include "latbench/numerics/random.hpp"
#include "latbench/trajectory/suite.hpp"

namespace latbench::tuning {

using controllers::Family;

bool ObjectiveVector::diverged() const {
  return std::isinf(max_iae) && std::isinf(max_m_epsilon) && std::isinf(max_m_zeta);
}

ObjectiveVector ObjectiveVector::sentinel() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf, inf};
}

ObjectiveVector ObjectiveVector::from_values(const std::vector<double>& v) {
  if (v.size() != 3) throw ArgumentError("objective vector needs three values");
  return {v[0], v[1], v[2]};
}

EvaluationContext tuning_context(std::uint64_t seed) {
  EvaluationContext c;
  for (const char* name : {"T1", "T5", "T6"}) c.trajectories.push_back(trajectory::benchmark_trajectory(name));
  c.sim.seed = seed;
  return c;
}

ObjectiveVector evaluate_candidate(const controllers::ControllerConfig& controller, const EvaluationContext& context) {
  controller.validate();
  if (context.trajectories.empty()) throw ArgumentError("no tuning trajectories");
  ObjectiveVector out;
  for (std::size_t i = 0; i < context.trajectories.size(); ++i) {
    controllers::SimOptions sim = context.sim;
    sim.seed = numerics::derive_seed(context.sim.seed, i);
    const auto& traj = context.trajectories[i];
    const auto log = controllers::run_closed_loop(traj, controller, context.vehicle, sim);
    if (log.diverged()) return ObjectiveVector::sentinel();
    const auto m = metrics::compute_metrics(log, traj);
    out.max_iae = std::max(out.max_iae, m.iae);
    out.max_m_epsilon = std::max(out.max_m_epsilon, m.m_epsilon.value_or(0.0));
    out.max_m_zeta = std::max(out.max_m_zeta, m.m_zeta.value_or(0.0));
  }
  return out;
}

namespace {

ParameterRange lin(const char* name, double lo, double hi) { return {name, lo, hi, 0.25 * (hi - lo), false}; }
ParameterRange logr(const char* name, double lo, double hi) {
  return {name, lo, hi, 0.25 * std::log10(hi / lo), true};
}

void add_preview(ParameterSpace& s) {
  s.ranges.push_back(lin("d_p0", 0.0, 5.0));
  s.ranges.push_back(lin("t_p", 0.0, 0.3));
}

}  // namespace

ParameterSpace default_parameter_space(Family family) {
  ParameterSpace s;
  switch (family) {
    case Family::kLqr:
      s.ranges = {logr("q1", 1e-4, 2e-2), logr("q2", 2e-5, 2e-3), logr("q3", 1e-4, 1e-2), logr("q4", 1e-5, 2e-3),
                  logr("N_LQR", 0.6, 95.0)};
      break;
    case Family::kMfc:
      s.ranges = {lin("K_p", 0.0, 5.0), logr("K_d", 0.18, 36.0), logr("alpha", 37.0, 5000.0)};
      break;
    case Family::kSamfc:
      s.ranges = {lin("K_p", 0.0, 7.5), logr("K_d", 0.2, 42.0), logr("alpha_0", 9.3, 940.0),
                  logr("v_x0", 0.27, 128.0), logr("K_alpha", 1.0, 100.0)};
      break;
    case Family::kPid:
      s.ranges = {logr("K_p", 0.007, 1.6), lin("K_i", 0.0, 1.0), logr("K_d", 0.0027, 0.65), logr("N_PID", 0.3, 39.0)};
      break;
    case Family::kNlmpc:
      s.ranges = {lin("h_p", 2.0, 40.0), lin("h_c", 1.0, 10.0), logr("w_udot", 1.5, 431.0)};
      break;
  }
  add_preview(s);
  return s;
}

ObjectiveFunction candidate_objective(Family family, const EvaluationContext& context) {
  return [family, &context](const std::vector<double>& p) {
    return evaluate_candidate(controllers::config_from_vector(family, p), context).values();
  };
}

}  // namespace latbench::tuning
