#include "latbench/controllers/mfc.hpp"

#include "latbench/error.hpp"

namespace latbench::controllers {

double samfc_alpha_kmh(double speed_kmh, const SamfcParams& p) {
  return speed_kmh < p.v_x0 ? p.alpha_0 : p.K_alpha * (speed_kmh - p.v_x0) + p.alpha_0;
}

double samfc_alpha(double v_x, const SamfcParams& p) { return samfc_alpha_kmh(3.6 * v_x, p); }

IntelligentPd::IntelligentPd(double K_p, double K_d, double C, double sample_time)
    : K_p_(K_p), K_d_(K_d), d1_(C, sample_time, 0.0), d2_(C, sample_time, 0.0) {}

void IntelligentPd::reset() {
  d1_.reset(0.0);
  d2_.reset(0.0);
  f_hat_ = y_dot_ = y_ddot_ = 0.0;
}

double IntelligentPd::step(double y, double alpha, double u_prev) {
  if (!(alpha > 0.0)) throw ArgumentError("ultra-local gain alpha must be > 0");
  y_dot_ = d1_.step(y);
  y_ddot_ = d2_.step(y_dot_);
  f_hat_ = y_ddot_ - alpha * u_prev;
  const double e = -y;
  const double e_dot = -y_dot_;
  return (-f_hat_ + K_p_ * e + K_d_ * e_dot) / alpha;
}

MfcLaw::MfcLaw(const MfcParams& params, double sample_time)
    : params_(params), ipd_(params.K_p, params.K_d, params.C, sample_time) {
  if (!(params.alpha > 0.0)) throw ArgumentError("MFC alpha must be > 0");
}

double MfcLaw::step(const ControlInputs& in) { return ipd_.step(-in.y_1, params_.alpha, in.u_prev); }

SamfcLaw::SamfcLaw(const SamfcParams& params, double sample_time)
    : params_(params), ipd_(params.K_p, params.K_d, params.C, sample_time) {
  if (!(params.alpha_0 > 0.0)) throw ArgumentError("SAMFC alpha_0 must be > 0");
}

double SamfcLaw::step(const ControlInputs& in) {
  return ipd_.step(-in.y_1, samfc_alpha(in.v_x, params_), in.u_prev);
}

}  // namespace latbench::controllers
