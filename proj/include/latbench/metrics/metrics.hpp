#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latbench/controllers/closed_loop.hpp"
#include "latbench/numerics/spectral.hpp"
#include "latbench/trajectory/trajectory.hpp"

namespace latbench::metrics {

enum class Aggregation { kMeanOfSections, kMaxOverSections };

/// Band power indicator: per STFT section, the maximum over band bins of
/// max(0, 10 log10 P + threshold_db), scaled and aggregated over sections.
struct SpectralMetricConfig {
  double band_lo = 1.1;  // Hz, inclusive
  double band_hi = 4.0;  // Hz, inclusive
  double hpf_cutoff = 0.5;
  double scale = 0.015;
  double threshold_db = 80.0;
  double section_seconds = 5.0;
  double overlap = 0.5;
  Aggregation aggregation = Aggregation::kMeanOfSections;

  static SpectralMetricConfig epsilon();
  static SpectralMetricConfig zeta();
  void validate(double sample_rate) const;
};

inline constexpr double kSampleRate = 20.0;

/// Trapezoidal integral of |e| over the series, dt per sample.
double iae_raw(std::span<const double> e_y, double dt);
/// iae_raw divided by the series duration; a single sample returns |e|.
double iae(std::span<const double> e_y, double dt);
double mle(std::span<const double> e_y);

/// Per-section indicator values (before scaling) of a spectrogram.
std::vector<double> section_values(const numerics::Spectrogram& spec, const SpectralMetricConfig& config);

/// Indicator over independent contiguous pieces of a signal. Pieces shorter
/// than one section are dropped; nullopt when nothing remains.
std::optional<double> spectral_metric(const std::vector<std::span<const double>>& pieces, double sample_rate,
                                      const SpectralMetricConfig& config);

/// Index ranges [begin, end) of ticks lying on straight sections.
std::vector<std::pair<std::size_t, std::size_t>> straight_tick_ranges(
    const controllers::SimLog& log, const std::vector<trajectory::Section>& sections);

/// Low-frequency indicator over the straight sections only.
std::optional<double> m_epsilon(std::span<const double> u_fb,
                                const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
                                double sample_rate = kSampleRate);
/// High-frequency indicator over the whole series.
std::optional<double> m_zeta(std::span<const double> u_fb, double sample_rate = kSampleRate);

struct MetricsReport {
  double iae = 0.0;
  double iae_raw = 0.0;
  double mle = 0.0;
  std::optional<double> m_epsilon;
  std::optional<double> m_zeta;
  bool diverged = false;
};

MetricsReport compute_metrics(const controllers::SimLog& log, const trajectory::Trajectory& trajectory);

/// {iae, iae_raw, mle, m_epsilon, m_zeta, diverged}; absent indicators are null.
nlohmann::json to_json(const MetricsReport& report);

}  // namespace latbench::metrics
