#pragma once

#include <cstddef>
#include <functional>

namespace latbench::util {

/// Hardware concurrency, at least 1.
unsigned default_jobs();

/// Calls body(i) for i in [0, n) on up to `jobs` threads. Work is handed out
/// by an atomic counter, so results must be written to slot i by the caller
/// to stay independent of scheduling. The first exception is rethrown after
/// all workers stop.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace latbench::util
