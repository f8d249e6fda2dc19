#include <arm_neon.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace latbench::simd::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void gemv_neon(const double* A, std::size_t rows, std::size_t cols, const double* x,
               double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_neon(A + r * cols, x, cols);
}

void dft_power_neon(const double* cos_table, const double* sin_table, std::size_t bins,
                    std::size_t n, const double* x, double* out) {
  for (std::size_t k = 0; k < bins; ++k) {
    const double re = dot_neon(cos_table + k * n, x, n);
    const double im = dot_neon(sin_table + k * n, x, n);
    out[k] = re * re + im * im;
  }
}

double sum_abs_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += std::fabs(x[i]);
  return total;
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(x + i)));
  double best = vmaxvq_f64(m);
  for (; i < n; ++i) best = std::fmax(best, std::fabs(x[i]));
  return best;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::kNeon,     dot_neon,     gemv_neon,
                                 dft_power_neon, sum_abs_neon, max_abs_neon};
  return table;
}

}  // namespace latbench::simd::detail
