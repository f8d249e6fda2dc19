#include "latbench/numerics/filters.hpp"

#include <cmath>
#include <numbers>

#include "latbench/error.hpp"

namespace latbench::numerics {

FilteredDerivative::FilteredDerivative(double smoothing, double sample_time,
                                       std::optional<double> initial_input)
    : smoothing_(smoothing), sample_time_(sample_time), previous_input_(initial_input) {
  if (!(smoothing > 0.0)) throw ArgumentError("filtered derivative: smoothing must be > 0");
  if (!(sample_time > 0.0)) throw ArgumentError("filtered derivative: sample time must be > 0");
}

double FilteredDerivative::step(double sample) {
  if (!previous_input_) previous_input_ = sample;
  // C y[k] + (1 - C) y[k-1] = (x[k] - x[k-1]) / Ts
  const double y =
      ((sample - *previous_input_) / sample_time_ - (1.0 - smoothing_) * previous_output_) /
      smoothing_;
  previous_input_ = sample;
  previous_output_ = y;
  return y;
}

void FilteredDerivative::reset(std::optional<double> initial_input) {
  previous_input_ = initial_input;
  previous_output_ = 0.0;
}

double filtered_derivative_step(FilteredDerivative& filter, double sample) {
  return filter.step(sample);
}

ButterworthHighPass::ButterworthHighPass(double sample_rate, double cutoff) {
  if (!(sample_rate > 0.0)) throw ArgumentError("high-pass: sample rate must be > 0");
  if (!(cutoff > 0.0 && cutoff < 0.5 * sample_rate)) {
    throw ArgumentError("high-pass: cutoff must lie in (0, fs/2)");
  }
  const double k = std::tan(std::numbers::pi * cutoff / sample_rate);
  const double k2 = k * k;
  const double norm = 1.0 / (1.0 + std::numbers::sqrt2 * k + k2);
  b0_ = norm;
  b1_ = -2.0 * norm;
  b2_ = norm;
  a1_ = 2.0 * (k2 - 1.0) * norm;
  a2_ = (1.0 - std::numbers::sqrt2 * k + k2) * norm;
}

void ButterworthHighPass::prime(double value) {
  // Transposed direct form II at equilibrium with y = 0 (b0 + b1 + b2 = 0).
  z2_ = b2_ * value;
  z1_ = b1_ * value + z2_;
}

double ButterworthHighPass::step(double x) {
  const double y = b0_ * x + z1_;
  z1_ = b1_ * x - a1_ * y + z2_;
  z2_ = b2_ * x - a2_ * y;
  return y;
}

std::vector<double> highpass_filter(std::span<const double> signal, double sample_rate,
                                    double cutoff) {
  ButterworthHighPass filter(sample_rate, cutoff);
  std::vector<double> out;
  out.reserve(signal.size());
  if (signal.empty()) return out;
  filter.prime(signal.front());
  for (double x : signal) out.push_back(filter.step(x));
  return out;
}

}  // namespace latbench::numerics
