#pragma once

#include <Eigen/Core>

#include "latbench/controllers/law.hpp"
#include "latbench/numerics/filters.hpp"

namespace latbench::controllers {

/// Gain on [e_y, e_y', e_psi, e_psi'] returning front road-wheel angle (rad),
/// from the error model discretized by zero-order hold, Q = diag(q), R = 1.
Eigen::RowVector4d lqr_gain(double v_x, const LqrParams& params, const vehicle::VehicleParams& vehicle,
                            double sample_time = kControlPeriod);

/// u_fb = -K x scaled to the normalized command. Rates come from filtered
/// derivatives with smoothing N_LQR. The gain is rescheduled when v_x moves
/// more than 0.5 m/s from the speed it was computed at.
class LqrLaw final : public FeedbackLaw {
 public:
  LqrLaw(const LqrParams& params, const vehicle::VehicleParams& vehicle, double sample_time = kControlPeriod);

  double step(const ControlInputs& in) override;
  void reset() override;

  const Eigen::RowVector4d& gain() const { return gain_; }
  double scheduled_speed() const { return scheduled_speed_; }

 private:
  LqrParams params_;
  vehicle::VehicleParams vehicle_;
  double sample_time_;
  numerics::FilteredDerivative d_ey_;
  numerics::FilteredDerivative d_epsi_;
  Eigen::RowVector4d gain_ = Eigen::RowVector4d::Zero();
  double scheduled_speed_ = -1.0;
  double last_u_ = 0.0;
};

}  // namespace latbench::controllers
