#pragma once

#include <cstdint>
#include <random>
#include <variant>

namespace latbench::numerics {

struct NormalDist {
  double mean;
  double stddev;
};

struct UniformDist {
  double lo;
  double hi;
};

using Distribution = std::variant<NormalDist, UniformDist>;

/// Seeded stream with bit-reproducible output on every platform: the engine is
/// std::mt19937_64 (fully specified by the standard) and the deviates are
/// produced here rather than by the implementation-defined std distributions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  double uniform01();  // [0, 1), 53 random bits
  double uniform(double lo, double hi);
  double standard_normal();  // Box-Muller

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Zero spread is allowed and still consumes one deviate. Throws ArgumentError
/// for stddev < 0 or lo > hi.
double sample_distribution(const Distribution& dist, RandomStream& stream);

/// Seed for stream `index` of a family rooted at `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace latbench::numerics
