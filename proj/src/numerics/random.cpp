#include "latbench/numerics/random.hpp"

#include <cmath>
#include <numbers>

#include "latbench/error.hpp"

namespace latbench::numerics {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double RandomStream::uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double RandomStream::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double sample_distribution(const Distribution& dist, RandomStream& stream) {
  if (const auto* n = std::get_if<NormalDist>(&dist)) {
    if (!(n->stddev >= 0.0)) throw ArgumentError("normal distribution needs stddev >= 0");
    return n->mean + n->stddev * stream.standard_normal();
  }
  const auto& u = std::get<UniformDist>(dist);
  if (!(u.lo <= u.hi)) throw ArgumentError("uniform distribution needs lo <= hi");
  return stream.uniform(u.lo, u.hi);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

}  // namespace latbench::numerics
