#include "latbench/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "latbench/error.hpp"
#include "latbench/numerics/filters.hpp"
#include "latbench/simd/kernels.hpp"

namespace latbench::metrics {

SpectralMetricConfig SpectralMetricConfig::epsilon() { return {}; }

SpectralMetricConfig SpectralMetricConfig::zeta() {
  SpectralMetricConfig c;
  c.band_lo = 4.0;
  c.band_hi = 10.0;
  c.hpf_cutoff = 4.0;
  c.scale = 0.04;
  c.aggregation = Aggregation::kMaxOverSections;
  return c;
}

void SpectralMetricConfig::validate(double sample_rate) const {
  if (!(band_lo > 0.0 && band_lo < band_hi && band_hi <= sample_rate / 2.0)) {
    throw ArgumentError("spectral band must lie in (0, fs/2]");
  }
  if (!(scale > 0.0)) throw ArgumentError("spectral scale must be > 0");
}

double iae_raw(std::span<const double> e, double dt) {
  if (e.empty()) throw ArgumentError("iae needs a nonempty series");
  if (e.size() == 1) return std::abs(e[0]) * dt;
  double sum = simd::sum_abs(e);
  sum -= 0.5 * (std::abs(e.front()) + std::abs(e.back()));
  return sum * dt;
}

double iae(std::span<const double> e, double dt) {
  if (e.empty()) throw ArgumentError("iae needs a nonempty series");
  if (e.size() == 1) return std::abs(e[0]);
  return iae_raw(e, dt) / (double(e.size() - 1) * dt);
}

double mle(std::span<const double> e) {
  if (e.empty()) throw ArgumentError("mle needs a nonempty series");
  return simd::max_abs(e);
}

std::vector<double> section_values(const numerics::Spectrogram& spec, const SpectralMetricConfig& c) {
  std::vector<double> out(spec.sections(), 0.0);
  const double tol = 1e-9;
  for (std::size_t s = 0; s < spec.sections(); ++s) {
    double best = 0.0;
    for (std::size_t k = 0; k < spec.bins(); ++k) {
      const double f = spec.frequencies[k];
      if (f < c.band_lo - tol || f > c.band_hi + tol) continue;
      const double p = spec.at(s, k);
      if (p > 0.0) best = std::max(best, 10.0 * std::log10(p) + c.threshold_db);
    }
    out[s] = best;
  }
  return out;
}

std::optional<double> spectral_metric(const std::vector<std::span<const double>>& pieces, double fs,
                                      const SpectralMetricConfig& c) {
  c.validate(fs);
  const std::size_t n = numerics::section_length(fs, c.section_seconds);
  double sum = 0.0;
  double best = 0.0;
  std::size_t count = 0;
  for (const auto& piece : pieces) {
    if (piece.size() < n) continue;
    const std::vector<double> filtered = numerics::highpass_filter(piece, fs, c.hpf_cutoff);
    const numerics::Spectrogram spec = numerics::stft_power(filtered, fs, c.section_seconds, c.overlap);
    for (double v : section_values(spec, c)) {
      sum += v;
      best = std::max(best, v);
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  const double value = c.aggregation == Aggregation::kMeanOfSections ? sum / double(count) : best;
  return c.scale * value;
}

std::vector<std::pair<std::size_t, std::size_t>> straight_tick_ranges(
    const controllers::SimLog& log, const std::vector<trajectory::Section>& sections) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& sec : sections) {
    std::size_t i = 0;
    const std::size_t n = log.ticks.size();
    while (i < n) {
      while (i < n && !(log.ticks[i].s >= sec.s_start && log.ticks[i].s <= sec.s_end)) ++i;
      std::size_t j = i;
      while (j < n && log.ticks[j].s >= sec.s_start && log.ticks[j].s <= sec.s_end) ++j;
      if (j > i) out.emplace_back(i, j);
      i = j;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> m_epsilon(std::span<const double> u_fb,
                                const std::vector<std::pair<std::size_t, std::size_t>>& ranges, double fs) {
  std::vector<std::span<const double>> pieces;
  for (const auto& [b, e] : ranges) {
    if (e > u_fb.size() || b > e) throw ArgumentError("straight range outside the series");
    pieces.push_back(u_fb.subspan(b, e - b));
  }
  return spectral_metric(pieces, fs, SpectralMetricConfig::epsilon());
}

std::optional<double> m_zeta(std::span<const double> u_fb, double fs) {
  return spectral_metric({u_fb}, fs, SpectralMetricConfig::zeta());
}

MetricsReport compute_metrics(const controllers::SimLog& log, const trajectory::Trajectory& trajectory) {
  MetricsReport r;
  r.diverged = log.diverged();
  if (log.ticks.empty()) return r;
  std::vector<double> e_y, u_fb;
  e_y.reserve(log.ticks.size());
  u_fb.reserve(log.ticks.size());
  for (const auto& t : log.ticks) {
    e_y.push_back(t.e_y);
    u_fb.push_back(t.u_fb);
  }
  const double fs = 1.0 / log.sample_time;
  r.iae_raw = iae_raw(e_y, log.sample_time);
  r.iae = iae(e_y, log.sample_time);
  r.mle = mle(e_y);
  r.m_epsilon = m_epsilon(u_fb, straight_tick_ranges(log, trajectory::straight_sections(trajectory)), fs);
  r.m_zeta = m_zeta(u_fb, fs);
  return r;
}

nlohmann::json to_json(const MetricsReport& r) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(); };
  return {{"iae", r.iae},         {"iae_raw", r.iae_raw},   {"mle", r.mle},
          {"m_epsilon", opt(r.m_epsilon)}, {"m_zeta", opt(r.m_zeta)}, {"diverged", r.diverged}};
}

}  // namespace latbench::metrics
