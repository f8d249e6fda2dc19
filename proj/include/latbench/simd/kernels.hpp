#pragma once

// Data-parallel inner loops used by the spectral metrics, the MPC QP and the
// error statistics. Every kernel has a scalar reference implementation; wider
// variants are picked once at startup from the CPU feature set and must agree
// with the reference to rounding (see tests/simd_equivalence_test.cpp).

#include <cstddef>
#include <span>
#include <string_view>

namespace latbench::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[r] = sum_c A[r*cols + c] * x[c], A row-major.
  void (*gemv)(const double* A, std::size_t rows, std::size_t cols, const double* x, double* y);
  // out[k] = (C x)_k^2 + (S x)_k^2 for row-major cos/sin tables of shape bins x n.
  void (*dft_power)(const double* cos_table, const double* sin_table, std::size_t bins,
                    std::size_t n, const double* x, double* out);
  double (*sum_abs)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
};

/// True when `isa` was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Table for a specific ISA; throws ArgumentError if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Best available table. LATBENCH_ISA=scalar|avx2|neon in the environment
/// forces a choice (falls back to scalar if the forced ISA is unavailable).
const KernelTable& active();

// Convenience wrappers over active().
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs(std::span<const double> x);
double max_abs(std::span<const double> x);

}  // namespace latbench::simd
