#pragma once

#include "latbench/controllers/law.hpp"

namespace latbench::controllers {

/// Parallel PID with a delayed backward-difference integrator and a filtered
/// derivative:
///   I[k] = I[k-1] + K_i Ts e[k-1]
///   D[k] = (1 - N Ts) D[k-1] + K_d N (e[k] - e[k-1])
/// By default the first error primes the derivative so a nonzero start does
/// not kick; prime_with_first = false starts from e[-1] = 0.
class PidFilter {
 public:
  PidFilter(const PidParams& params, double sample_time = kControlPeriod, bool prime_with_first = true);
  double step(double e);
  void reset();

 private:
  PidParams params_;
  double sample_time_;
  bool prime_;
  bool started_ = false;
  double e_prev_ = 0.0;
  double integral_ = 0.0;
  double derivative_ = 0.0;
};

/// Error e = y_1, the offset of the path from the vehicle axis at the preview point.
class PidLaw final : public FeedbackLaw {
 public:
  explicit PidLaw(const PidParams& params, double sample_time = kControlPeriod);
  double step(const ControlInputs& in) override { return pid_.step(in.y_1); }
  void reset() override { pid_.reset(); }

 private:
  PidFilter pid_;
};

}  // namespace latbench::controllers
