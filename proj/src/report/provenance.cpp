#include "latbench/report/provenance.hpp"

#include <cstdio>

namespace latbench::report {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

Provenance Provenance::of(std::uint64_t seed, std::string_view canonical_config) {
  Provenance p;
  p.seed = seed;
  p.config_hash = hex64(fnv1a64(canonical_config));
  return p;
}

Provenance Provenance::of(std::uint64_t seed, const nlohmann::json& config) {
  // nlohmann::json objects are key-sorted, so dump() is canonical.
  return of(seed, std::string_view(config.dump()));
}

std::string Provenance::csv_comment() const {
  return "# latbench version=" + version + " seed=" + std::to_string(seed) + " config=" + config_hash;
}

std::string Provenance::svg_comment() const {
  return "<!-- latbench version=" + version + " seed=" + std::to_string(seed) + " config=" + config_hash + " -->";
}

nlohmann::json Provenance::to_json() const {
  return {{"version", version}, {"seed", seed}, {"config_hash", config_hash}};
}

}  // namespace latbench::report
