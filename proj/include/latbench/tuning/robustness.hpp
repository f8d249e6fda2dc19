#pragma once

#include <cstdint>
#include <vector>

#include "latbench/controllers/closed_loop.hpp"
#include "latbench/controllers/config.hpp"
#include "latbench/numerics/random.hpp"
#include "latbench/trajectory/trajectory.hpp"
#include "latbench/vehicle/params.hpp"

namespace latbench::tuning {

/// Plant parameter variations. Draws of mass, I_z and a3 that are not positive
/// are rejected and drawn again.
struct RobustnessDistributions {
  numerics::Distribution mass = numerics::NormalDist{1372.0, 137.2};
  numerics::Distribution inertia = numerics::NormalDist{1990.0, 199.0};
  numerics::Distribution mu = numerics::UniformDist{0.5, 1.17};
  numerics::Distribution a3 = numerics::NormalDist{80157.0, 16031.0};

  /// Zero spread around the nominal vehicle with mu = 1.
  static RobustnessDistributions degenerate(const vehicle::VehicleParams& nominal);
};

struct RobustnessOptions {
  std::size_t draws = 200;
  std::uint64_t seed = 0;
  double threshold = 3.0;  // m; a run fails when |e_y| exceeds it or the end is not reached
  unsigned jobs = 1;
  RobustnessDistributions distributions;
  controllers::SimOptions sim;
};

struct RobustnessResult {
  std::size_t draws = 0;
  std::size_t successes = 0;
  double success_pct = 0.0;
  std::vector<vehicle::VehicleParams> samples;
  std::vector<bool> passed;
};

/// Plant parameters of draw `index`; its stream is derive_seed(seed, index).
vehicle::VehicleParams sample_vehicle(const vehicle::VehicleParams& nominal, const RobustnessDistributions& dist,
                                      std::uint64_t seed, std::size_t index);

/// Controller models keep the nominal parameters; only the plant is perturbed.
/// Each draw also uses its own derived seed for measurement noise.
RobustnessResult monte_carlo_robustness(const controllers::ControllerConfig& controller,
                                        const trajectory::Trajectory& trajectory,
                                        const vehicle::VehicleParams& nominal, const RobustnessOptions& options);

}  // namespace latbench::tuning
