#pragma once

#include "latbench/controllers/law.hpp"
#include "latbench/numerics/filters.hpp"

namespace latbench::controllers {

/// alpha_0 below v_x0, then growing with slope K_alpha. The adaptation speed
/// is in km/h, like v_x0.
double samfc_alpha_kmh(double speed_kmh, const SamfcParams& params);
/// Same law for a speed in m/s.
double samfc_alpha(double v_x, const SamfcParams& params);

/// Second-order intelligent PD on the ultra-local model y'' = F + alpha u with
/// zero reference. F is re-estimated each tick from the twice-filtered
/// derivative of y and the previous action.
class IntelligentPd {
 public:
  IntelligentPd(double K_p, double K_d, double C, double sample_time = kControlPeriod);

  /// One tick for output y, gain alpha and the action applied at the previous tick.
  double step(double y, double alpha, double u_prev);
  void reset();

  double f_hat() const { return f_hat_; }
  double y_dot() const { return y_dot_; }
  double y_ddot() const { return y_ddot_; }

 private:
  double K_p_;
  double K_d_;
  numerics::FilteredDerivative d1_;
  numerics::FilteredDerivative d2_;
  double f_hat_ = 0.0;
  double y_dot_ = 0.0;
  double y_ddot_ = 0.0;
};

/// The regulated output is the vehicle deviation at the preview point, -y_1.
class MfcLaw final : public FeedbackLaw {
 public:
  explicit MfcLaw(const MfcParams& params, double sample_time = kControlPeriod);
  double step(const ControlInputs& in) override;
  void reset() override { ipd_.reset(); }
  const IntelligentPd& ipd() const { return ipd_; }

 private:
  MfcParams params_;
  IntelligentPd ipd_;
};

class SamfcLaw final : public FeedbackLaw {
 public:
  explicit SamfcLaw(const SamfcParams& params, double sample_time = kControlPeriod);
  double step(const ControlInputs& in) override;
  void reset() override { ipd_.reset(); }
  const IntelligentPd& ipd() const { return ipd_; }

 private:
  SamfcParams params_;
  IntelligentPd ipd_;
};

}  // namespace latbench::controllers
