#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "latbench/error.hpp"

namespace latbench::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(LATBENCH_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(LATBENCH_HAVE_NEON_TU)
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw ArgumentError("SIMD kernels for '" + std::string(isa_name(isa)) + "' are not available");
  }
  switch (isa) {
#if defined(LATBENCH_HAVE_AVX2_TU)
    case Isa::kAvx2: return detail::avx2_table();
#endif
#if defined(LATBENCH_HAVE_NEON_TU)
    case Isa::kNeon: return detail::neon_table();
#endif
    default: return detail::scalar_table();
  }
}

namespace {

const KernelTable& select() {
  if (const char* forced = std::getenv("LATBENCH_ISA")) {
    const std::string want(forced);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == isa_name(isa) && isa_available(isa)) return kernels_for(isa);
    }
    return detail::scalar_table();
  }
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (isa_available(isa)) return kernels_for(isa);
  }
  return detail::scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("dot: size mismatch");
  return active().dot(a.data(), b.data(), a.size());
}

double sum_abs(std::span<const double> x) { return active().sum_abs(x.data(), x.size()); }

double max_abs(std::span<const double> x) { return active().max_abs(x.data(), x.size()); }

}  // namespace latbench::simd
