#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace latbench::simd::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void gemv_avx2(const double* A, std::size_t rows, std::size_t cols, const double* x,
               double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_avx2(A + r * cols, x, cols);
}

void dft_power_avx2(const double* cos_table, const double* sin_table, std::size_t bins,
                    std::size_t n, const double* x, double* out) {
  for (std::size_t k = 0; k < bins; ++k) {
    const double* c = cos_table + k * n;
    const double* s = sin_table + k * n;
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256d xv = _mm256_loadu_pd(x + i);
      re = _mm256_fmadd_pd(_mm256_loadu_pd(c + i), xv, re);
      im = _mm256_fmadd_pd(_mm256_loadu_pd(s + i), xv, im);
    }
    double r = hsum(re);
    double m = hsum(im);
    for (; i < n; ++i) {
      r += c[i] * x[i];
      m += s[i] * x[i];
    }
    out[k] = r * r + m * m;
  }
}

double sum_abs_avx2(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
  double total = hsum(acc);
  for (; i < n; ++i) total += std::fabs(x[i]);
  return total;
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double best = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) best = std::fmax(best, std::fabs(x[i]));
  return best;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::kAvx2,     dot_avx2,     gemv_avx2,
                                 dft_power_avx2, sum_abs_avx2, max_abs_avx2};
  return table;
}

}  // namespace latbench::simd::detail
