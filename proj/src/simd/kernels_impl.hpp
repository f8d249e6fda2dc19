#pragma once

#include "latbench/simd/kernels.hpp"

namespace latbench::simd::detail {

const KernelTable& scalar_table();
#if defined(LATBENCH_HAVE_AVX2_TU)
const KernelTable& avx2_table();
#endif
#if defined(LATBENCH_HAVE_NEON_TU)
const KernelTable& neon_table();
#endif

}  // namespace latbench::simd::detail
