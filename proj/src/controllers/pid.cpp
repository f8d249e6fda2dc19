#include "latbench/controllers/pid.hpp"

namespace latbench::controllers {

PidFilter::PidFilter(const PidParams& params, double sample_time, bool prime_with_first)
    : params_(params), sample_time_(sample_time), prime_(prime_with_first) {}

void PidFilter::reset() {
  started_ = false;
  e_prev_ = integral_ = derivative_ = 0.0;
}

double PidFilter::step(double e) {
  if (!started_) {
    // e[-1] = 0 for the integrator either way.
    started_ = true;
    if (prime_) e_prev_ = e;
  } else {
    integral_ += params_.K_i * sample_time_ * e_prev_;
  }
  derivative_ = (1.0 - params_.N_PID * sample_time_) * derivative_ + params_.K_d * params_.N_PID * (e - e_prev_);
  e_prev_ = e;
  return params_.K_p * e + integral_ + derivative_;
}

PidLaw::PidLaw(const PidParams& params, double sample_time) : pid_(params, sample_time) {}

}  // namespace latbench::controllers
