#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace latbench::report {

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

/// Stamped into every artifact: library version, seed and a hash of the
/// canonical configuration text.
struct Provenance {
  std::string version = LATBENCH_VERSION;
  std::uint64_t seed = 0;
  std::string config_hash;

  static Provenance of(std::uint64_t seed, std::string_view canonical_config);
  static Provenance of(std::uint64_t seed, const nlohmann::json& config);

  std::string csv_comment() const;  // "# latbench version=... seed=... config=..."
  std::string svg_comment() const;
  nlohmann::json to_json() const;
};

}  // namespace latbench::report
