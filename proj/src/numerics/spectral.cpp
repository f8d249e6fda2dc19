#include "latbench/numerics/spectral.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "latbench/error.hpp"
#include "latbench/simd/kernels.hpp"

namespace latbench::numerics {
namespace {

struct DftPlan {
  std::size_t n = 0;
  std::size_t bins = 0;
  std::vector<double> window;
  std::vector<double> cos_table;  // bins x n
  std::vector<double> sin_table;
};

std::shared_ptr<const DftPlan> make_plan(std::size_t n) {
  auto plan = std::make_shared<DftPlan>();
  plan->n = n;
  plan->bins = n / 2 + 1;
  plan->window.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    plan->window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * double(i) / double(n));
  }
  plan->cos_table.resize(plan->bins * n);
  plan->sin_table.resize(plan->bins * n);
  for (std::size_t k = 0; k < plan->bins; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      // Exact integer phase reduction keeps the tables symmetric.
      const double phase = 2.0 * std::numbers::pi * double((k * i) % n) / double(n);
      plan->cos_table[k * n + i] = std::cos(phase);
      plan->sin_table[k * n + i] = -std::sin(phase);
    }
  }
  return plan;
}

std::shared_ptr<const DftPlan> plan_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const DftPlan>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = make_plan(n);
  return slot;
}

}  // namespace

std::size_t section_length(double sample_rate, double section_seconds) {
  return static_cast<std::size_t>(std::llround(sample_rate * section_seconds));
}

Spectrogram stft_power(std::span<const double> signal, double sample_rate, double section_seconds,
                       double overlap_fraction) {
  if (!(sample_rate > 0.0)) throw ArgumentError("stft: sample rate must be > 0");
  if (!(section_seconds > 0.0)) throw ArgumentError("stft: section length must be > 0");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
    throw ArgumentError("stft: overlap fraction must lie in [0, 1)");
  }
  const std::size_t n = section_length(sample_rate, section_seconds);
  if (n < 2) throw ArgumentError("stft: section shorter than two samples");
  if (signal.size() < n) throw ArgumentError("stft: signal shorter than one section (empty spectrogram)");
  const std::size_t hop =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(double(n) * (1.0 - overlap_fraction))));
  const auto plan = plan_for(n);
  const std::size_t count = (signal.size() - n) / hop + 1;

  Spectrogram out;
  out.frequencies.resize(plan->bins);
  for (std::size_t k = 0; k < plan->bins; ++k) out.frequencies[k] = double(k) * sample_rate / double(n);
  out.section_times.resize(count);
  out.power.resize(count * plan->bins);

  const auto& kern = simd::active();
  std::vector<double> frame(n);
  const double inv_n2 = 1.0 / (double(n) * double(n));
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t start = s * hop;
    for (std::size_t i = 0; i < n; ++i) frame[i] = plan->window[i] * signal[start + i];
    double* row = out.power.data() + s * plan->bins;
    kern.dft_power(plan->cos_table.data(), plan->sin_table.data(), plan->bins, n, frame.data(), row);
    for (std::size_t k = 0; k < plan->bins; ++k) {
      const bool edge = (k == 0) || (n % 2 == 0 && k == plan->bins - 1);
      row[k] *= (edge ? 1.0 : 2.0) * inv_n2;
    }
    out.section_times[s] = (double(start) + 0.5 * double(n)) / sample_rate;
  }
  return out;
}

}  // namespace latbench::numerics
