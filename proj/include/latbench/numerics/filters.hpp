#pragma once

#include <optional>
#include <span>
#include <vector>

namespace latbench::numerics {

/// Discrete filtered derivative
///   D(z) = (1/Ts) (1 - z^-1) / (C + (1 - C) z^-1).
/// C = 1 is the plain backward difference; C > 1 adds smoothing.
class FilteredDerivative {
 public:
  /// With no initial input the first sample primes the filter (output 0).
  FilteredDerivative(double smoothing, double sample_time,
                     std::optional<double> initial_input = std::nullopt);

  double step(double sample);
  void reset(std::optional<double> initial_input = std::nullopt);

  double smoothing() const { return smoothing_; }
  double sample_time() const { return sample_time_; }
  double previous_output() const { return previous_output_; }

 private:
  double smoothing_;
  double sample_time_;
  std::optional<double> previous_input_;
  double previous_output_ = 0.0;
};

/// Free-function form of one FilteredDerivative update.
double filtered_derivative_step(FilteredDerivative& filter, double sample);

/// Second-order Butterworth high-pass (bilinear transform, prewarped cutoff).
class ButterworthHighPass {
 public:
  ButterworthHighPass(double sample_rate, double cutoff);

  /// State set as if `value` had been applied forever (zero output).
  void prime(double value);
  double step(double x);

  double b0() const { return b0_; }
  double b1() const { return b1_; }
  double b2() const { return b2_; }
  double a1() const { return a1_; }
  double a2() const { return a2_; }

 private:
  double b0_, b1_, b2_, a1_, a2_;
  double z1_ = 0.0, z2_ = 0.0;
};

/// Filters a whole series, priming the state with the first sample so a
/// constant offset produces no start-up transient.
std::vector<double> highpass_filter(std::span<const double> signal, double sample_rate,
                                    double cutoff);

}  // namespace latbench::numerics
