#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "latbench/controllers/closed_loop.hpp"
#include "latbench/controllers/config.hpp"
#include "latbench/trajectory/trajectory.hpp"
#include "latbench/tuning/pareto.hpp"
#include "latbench/vehicle/params.hpp"

namespace latbench::tuning {

/// Worst case over the tuning trajectories. A diverged run sets all three to +inf.
struct ObjectiveVector {
  double max_iae = 0.0;
  double max_m_epsilon = 0.0;
  double max_m_zeta = 0.0;

  std::vector<double> values() const { return {max_iae, max_m_epsilon, max_m_zeta}; }
  bool diverged() const;
  static ObjectiveVector sentinel();
  static ObjectiveVector from_values(const std::vector<double>& values);
};

struct EvaluationContext {
  std::vector<trajectory::Trajectory> trajectories;
  vehicle::VehicleParams vehicle;
  controllers::SimOptions sim;  // the noise seed of trajectory i is derive_seed(sim.seed, i)
};

/// T1, T5 and T6 with nominal vehicle and default simulation options.
EvaluationContext tuning_context(std::uint64_t seed = 0);

/// Missing spectral indicators (no qualifying section) count as 0.
ObjectiveVector evaluate_candidate(const controllers::ControllerConfig& controller, const EvaluationContext& context);

/// Defaults bracket the published setups: typically x0.1 to x10 of each value,
/// [0, b] for parameters published as zero, log scale for strictly positive
/// ranges wider than a decade. PID N is capped below 2/T_s (filter stability).
ParameterSpace default_parameter_space(controllers::Family family);

/// Objective over a family's parameter vector for pareto_search.
ObjectiveFunction candidate_objective(controllers::Family family, const EvaluationContext& context);

}  // namespace latbench::tuning
