#include "latbench/controllers/closed_loop.hpp"

#include <algorithm>
#include <cmath>

#include "latbench/controllers/feedforward.hpp"
#include "latbench/controllers/law.hpp"
#include "latbench/controllers/lqr.hpp"
#include "latbench/controllers/mfc.hpp"
#include "latbench/controllers/nlmpc.hpp"
#include "latbench/controllers/pid.hpp"
#include "latbench/error.hpp"
#include "latbench/numerics/random.hpp"
#include "latbench/vehicle/tracking.hpp"

namespace latbench::controllers {

std::unique_ptr<FeedbackLaw> make_feedback_law(const ControllerConfig& config, const vehicle::VehicleParams& params,
                                               double sample_time) {
  config.validate();
  return std::visit(
      [&](const auto& p) -> std::unique_ptr<FeedbackLaw> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LqrParams>) {
          return std::make_unique<LqrLaw>(p, params, sample_time);
        } else if constexpr (std::is_same_v<T, MfcParams>) {
          return std::make_unique<MfcLaw>(p, sample_time);
        } else if constexpr (std::is_same_v<T, SamfcParams>) {
          return std::make_unique<SamfcLaw>(p, sample_time);
        } else if constexpr (std::is_same_v<T, PidParams>) {
          return std::make_unique<PidLaw>(p, sample_time);
        } else {
          return std::make_unique<NlmpcLaw>(p, params, sample_time);
        }
      },
      config.params);
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::kReachedEnd: return "reached_end";
    case Termination::kDiverged: return "diverged";
    case Termination::kTimeout: return "timeout";
  }
  return "?";
}

namespace {

// Planned speed and its along-path acceleration v dv/ds at arclength s.
class SpeedReference {
 public:
  explicit SpeedReference(const trajectory::Trajectory& t) : t_(t) {}

  void at(double s, double& v, double& a) const {
    const auto& p = t_.path;
    if (s <= p.front().s) {
      v = t_.speed.front();
      a = accel(0);
      return;
    }
    if (s >= p.back().s) {
      v = t_.speed.back();
      a = 0.0;
      return;
    }
    const auto it = std::upper_bound(p.begin(), p.end(), s,
                                     [](double value, const trajectory::PathPoint& q) { return value < q.s; });
    const std::size_t i = static_cast<std::size_t>(it - p.begin()) - 1;
    const double w = (s - p[i].s) / (p[i + 1].s - p[i].s);
    const double v0 = t_.speed[i];
    const double v1 = t_.speed[i + 1];
    // Constant acceleration within the interval: v^2 is linear in s.
    v = std::sqrt(std::max(0.0, v0 * v0 + w * (v1 * v1 - v0 * v0)));
    a = accel(i);
  }

 private:
  double accel(std::size_t i) const {
    const auto& p = t_.path;
    if (i + 1 >= p.size()) return 0.0;
    const double v0 = t_.speed[i];
    const double v1 = t_.speed[i + 1];
    return (v1 * v1 - v0 * v0) / (2.0 * (p[i + 1].s - p[i].s));
  }

  const trajectory::Trajectory& t_;
};

}  // namespace

SimLog run_closed_loop(const trajectory::Trajectory& traj, const ControllerConfig& controller,
                       const vehicle::VehicleParams& params, const SimOptions& opt) {
  if (traj.path.size() < 2 || traj.speed.size() != traj.path.size()) {
    throw ArgumentError("closed loop needs a trajectory with a speed profile");
  }
  params.validate();
  const vehicle::VehicleParams& plant = opt.plant_params ? *opt.plant_params : params;
  plant.validate();
  if (!(opt.control_period > 0.0 && opt.plant_step > 0.0)) throw ArgumentError("time steps must be > 0");
  const int substeps = static_cast<int>(std::lround(opt.control_period / opt.plant_step));
  if (substeps < 1 || std::abs(substeps * opt.plant_step - opt.control_period) > 1e-12) {
    throw ArgumentError("control period must be a multiple of the plant step");
  }
  auto law = make_feedback_law(controller, params, opt.control_period);

  const auto& start = traj.path.front();
  vehicle::VehicleState state;
  state.x = start.x - std::sin(start.heading) * opt.initial_lateral_offset;
  state.y = start.y + std::cos(start.heading) * opt.initial_lateral_offset;
  state.psi = start.heading;
  state.v_x = opt.initial_speed.value_or(traj.speed.front());

  vehicle::PlantOptions plant_options;
  plant_options.hold_speed = opt.hold_speed;

  vehicle::PathLocator truth(traj.path);
  vehicle::PathLocator measured(traj.path);
  vehicle::PathLocator preview(traj.path);
  numerics::RandomStream noise(opt.seed);
  const SpeedReference speed_ref(traj);

  const double s_end = traj.path.back().s;
  double planned = trajectory::traversal_time(traj, 0, traj.path.size() - 1);
  if (opt.hold_speed && state.v_x > 0.0) planned = std::min(planned, traj.length() / state.v_x);
  const double t_max = std::min(planned, 36000.0) + opt.time_margin;

  SimLog log;
  log.sample_time = opt.control_period;
  log.ticks.reserve(static_cast<std::size_t>(t_max / opt.control_period) + 2);
  double u_applied = 0.0;
  vehicle::SteeringPd steering(plant.delta_dot_max);

  for (long k = 0;; ++k) {
    const double t = double(k) * opt.control_period;
    const vehicle::PathProjection real = truth.project(state.x, state.y);
    if (std::abs(real.lateral) > opt.divergence_threshold) {
      log.termination = Termination::kDiverged;
      break;
    }
    if (real.beyond_end || real.s >= s_end - opt.end_tolerance) {
      log.termination = Termination::kReachedEnd;
      break;
    }
    if (t > t_max) {
      log.termination = Termination::kTimeout;
      break;
    }

    vehicle::VehicleState sensed = state;
    sensed.x += opt.position_noise * noise.standard_normal();
    sensed.y += opt.position_noise * noise.standard_normal();
    sensed.psi += opt.heading_noise * noise.standard_normal();

    const double d_p = controller.preview.distance(state.v_x);
    const vehicle::TrackingErrors te = vehicle::tracking_errors(sensed, measured, preview, d_p);

    ControlInputs in;
    in.y_1 = te.y_1;
    in.e_psi = te.e_psi;
    in.v_x = state.v_x;
    in.kappa = te.kappa;
    in.kappa_preview = te.kappa_preview;
    in.u_ff = feedforward(te.kappa_preview, params);
    in.u_prev = u_applied;
    in.preview_distance = d_p;
    in.e_y = te.e_y;
    in.e_y_rate = state.v_y * std::cos(te.e_psi) + state.v_x * std::sin(te.e_psi);
    in.e_psi_rate = state.yaw_rate - state.v_x * te.kappa;

    const double u_fb = std::clamp(law->step(in), -1.0, 1.0);
    const double raw_total = in.u_ff + u_fb;
    const double total = std::clamp(raw_total, -1.0, 1.0);
    u_applied = total - in.u_ff;

    SimTick tick;
    tick.t = t;
    tick.s = real.s;
    tick.x = state.x;
    tick.y = state.y;
    tick.psi = state.psi;
    tick.v_x = state.v_x;
    tick.y_1 = te.y_1;
    tick.e_psi = te.e_psi;
    tick.kappa_preview = te.kappa_preview;
    tick.kappa = te.kappa;
    tick.u_ff = in.u_ff;
    tick.u_fb = u_fb;
    tick.delta_t = params.delta_max * total;
    tick.e_y = real.lateral;
    tick.clamped = raw_total != total;

    double v_ref = 0.0, a_ff = 0.0;
    speed_ref.at(real.s, v_ref, a_ff);
    v_ref = std::max(v_ref, opt.creep_speed);
    const double a_cmd =
        std::clamp(a_ff + opt.speed_gain * (v_ref - state.v_x), -traj.limits.a_x_min, traj.limits.a_x_max);

    bool failed = false;
    try {
      for (int i = 0; i < substeps; ++i) {
        const double torque = steering.torque(tick.delta_t, state.delta_d, opt.plant_step);
        state = vehicle::plant_step(state, torque, a_cmd, opt.plant_step, plant, opt.tire, plant_options);
      }
    } catch (const SimulationDiverged&) {
      failed = true;
    } catch (const DegenerateSpeedError&) {
      failed = true;
    }
    tick.delta_d = state.delta_d;
    log.ticks.push_back(tick);
    if (failed) {
      log.termination = Termination::kDiverged;
      break;
    }
  }
  log.controller_faults = law->faults();
  return log;
}

}  // namespace latbench::controllers
