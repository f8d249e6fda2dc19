#include "latbench/tuning/robustness.hpp"

#include <cmath>

#include "latbench/error.hpp"
#include "latbench/util/parallel.hpp"

namespace latbench::tuning {

namespace {

double positive_draw(const numerics::Distribution& d, numerics::RandomStream& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double x = numerics::sample_distribution(d, rng);
    if (x > 0.0) return x;
  }
  throw ArgumentError("distribution yields no positive values");
}

}  // namespace

RobustnessDistributions RobustnessDistributions::degenerate(const vehicle::VehicleParams& nominal) {
  RobustnessDistributions d;
  d.mass = numerics::NormalDist{nominal.m, 0.0};
  d.inertia = numerics::NormalDist{nominal.I_z, 0.0};
  d.mu = numerics::UniformDist{1.0, 1.0};
  d.a3 = numerics::NormalDist{nominal.a3, 0.0};
  return d;
}

vehicle::VehicleParams sample_vehicle(const vehicle::VehicleParams& nominal, const RobustnessDistributions& dist,
                                      std::uint64_t seed, std::size_t index) {
  numerics::RandomStream rng(numerics::derive_seed(seed, index));
  vehicle::VehicleParams p = nominal;
  p.m = positive_draw(dist.mass, rng);
  p.I_z = positive_draw(dist.inertia, rng);
  p.mu = numerics::sample_distribution(dist.mu, rng);
  p.a3 = positive_draw(dist.a3, rng);
  return p;
}

RobustnessResult monte_carlo_robustness(const controllers::ControllerConfig& controller,
                                        const trajectory::Trajectory& trajectory,
                                        const vehicle::VehicleParams& nominal, const RobustnessOptions& options) {
  controller.validate();
  if (options.draws == 0) throw ArgumentError("robustness needs at least one draw");
  if (!(options.threshold > 0.0)) throw ArgumentError("robustness threshold must be > 0");
  RobustnessResult r;
  r.draws = options.draws;
  r.samples.resize(options.draws);
  std::vector<char> ok(options.draws, 0);
  util::parallel_for(options.draws, std::max(1u, options.jobs), [&](std::size_t i) {
    r.samples[i] = sample_vehicle(nominal, options.distributions, options.seed, i);
    controllers::SimOptions sim = options.sim;
    sim.plant_params = r.samples[i];
    sim.divergence_threshold = options.threshold;
    sim.seed = numerics::derive_seed(options.seed ^ 0x9e3779b97f4a7c15ULL, i);
    ok[i] = controllers::run_closed_loop(trajectory, controller, nominal, sim).diverged() ? 0 : 1;
  });
  r.passed.assign(ok.begin(), ok.end());
  for (char c : ok) r.successes += c ? 1 : 0;
  r.success_pct = 100.0 * double(r.successes) / double(r.draws);
  return r;
}

}  // namespace latbench::tuning
