#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace latbench::numerics {

/// One-sided short-time power spectrum.
///
/// Each section of N samples is multiplied by a periodic Hann window and
/// transformed; bin k holds c_k |X_k|^2 / N^2 with c_k = 2 except at DC and
/// Nyquist. The bins of a section therefore sum to the windowed mean square
/// (1/N) sum (w[n] x[n])^2.
struct Spectrogram {
  std::vector<double> section_times;  // centre of each section, s
  std::vector<double> frequencies;    // Hz, 0 .. fs/2
  std::vector<double> power;          // row-major, sections x bins

  std::size_t sections() const { return section_times.size(); }
  std::size_t bins() const { return frequencies.size(); }
  double at(std::size_t section, std::size_t bin) const { return power[section * bins() + bin]; }
  std::span<const double> row(std::size_t section) const {
    return {power.data() + section * bins(), bins()};
  }
};

/// Throws ArgumentError when the signal is shorter than one section (empty
/// spectrogram) or parameters are out of range.
Spectrogram stft_power(std::span<const double> signal, double sample_rate, double section_seconds,
                       double overlap_fraction);

/// Samples per section for the given rate and duration.
std::size_t section_length(double sample_rate, double section_seconds);

}  // namespace latbench::numerics
