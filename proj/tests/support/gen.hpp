#pragma once

// Hand-rolled generators for property tests. Every case draws from its own
// stream so a failure can be replayed from the printed seed.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace latbench::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_real(double lo, double hi);
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }
  std::vector<double> reals(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = real(lo, hi);
    return v;
  }
  std::uint64_t seed() const { return seed_; }
  std::string where() const { return "case seed " + std::to_string(seed_); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

inline double Gen::log_real(double lo, double hi) {
  return std::exp(real(std::log(lo), std::log(hi)));
}

/// Runs body(gen) for `cases` independent seeds derived from `root`.
template <typename Body>
void for_all(std::uint64_t root, int cases, Body&& body) {
  for (int i = 0; i < cases; ++i) {
    Gen g(root * 1000003ULL + static_cast<std::uint64_t>(i));
    body(g);
  }
}

}  // namespace latbench::testing
