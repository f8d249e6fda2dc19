#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace latbench::controllers {

/// d_p = d_p0 + v_x t_p.
struct PreviewConfig {
  double d_p0 = 0.0;
  double t_p = 0.0;

  double distance(double v_x) const { return d_p0 + std::max(0.0, v_x) * t_p; }
};

struct LqrParams {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
  double N_LQR = 1.0;
};

struct MfcParams {
  double K_p = 0.0;
  double K_d = 0.0;
  double alpha = 1.0;
  double C = 1.5;
};

struct SamfcParams {
  double K_p = 0.0;
  double K_d = 0.0;
  double alpha_0 = 1.0;
  double v_x0 = 0.0;  // km/h
  double K_alpha = 0.0;
  double C = 1.5;
};

struct PidParams {
  double K_p = 0.0;
  double K_i = 0.0;
  double K_d = 0.0;
  double N_PID = 1.0;
};

struct NlmpcParams {
  int h_p = 10;
  int h_c = 3;
  double w_udot = 1.0;
};

enum class Family { kLqr, kMfc, kSamfc, kPid, kNlmpc };

using ControllerParams = std::variant<LqrParams, MfcParams, SamfcParams, PidParams, NlmpcParams>;

struct ControllerConfig {
  ControllerParams params;
  PreviewConfig preview;
  std::string label;  // e.g. "PID-1"; informational

  Family family() const;
  /// Throws ConfigError naming the offending field.
  void validate() const;
};

std::string family_name(Family family);  // "LQR", "MFC", "SAMFC", "PID", "NLMPC"
Family parse_family(const std::string& name);
const std::vector<Family>& all_families();

/// {type, params{...}, preview{d_p0, t_p}}; "label" is optional.
nlohmann::json to_json(const ControllerConfig& config);
ControllerConfig controller_from_json(const nlohmann::json& doc);
ControllerConfig load_controller_config(const std::string& path);

/// Tunable parameter names of a family in a fixed order; the preview pair
/// (d_p0, t_p) always comes last.
const std::vector<std::string>& parameter_names(Family family);
std::vector<double> parameter_vector(const ControllerConfig& config);
/// Inverse of parameter_vector; integer horizons are rounded and h_c capped at h_p.
ControllerConfig config_from_vector(Family family, const std::vector<double>& values);

}  // namespace latbench::controllers
