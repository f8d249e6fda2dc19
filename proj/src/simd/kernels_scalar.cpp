#include <cmath>

#include "kernels_impl.hpp"

namespace latbench::simd::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void gemv_scalar(const double* A, std::size_t rows, std::size_t cols, const double* x,
                 double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_scalar(A + r * cols, x, cols);
}

void dft_power_scalar(const double* cos_table, const double* sin_table, std::size_t bins,
                      std::size_t n, const double* x, double* out) {
  for (std::size_t k = 0; k < bins; ++k) {
    const double re = dot_scalar(cos_table + k * n, x, n);
    const double im = dot_scalar(sin_table + k * n, x, n);
    out[k] = re * re + im * im;
  }
}

double sum_abs_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar,     dot_scalar,     gemv_scalar,
                                 dft_power_scalar, sum_abs_scalar, max_abs_scalar};
  return table;
}

}  // namespace latbench::simd::detail
