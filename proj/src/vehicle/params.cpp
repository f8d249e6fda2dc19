#include "latbench/vehicle/params.hpp"

#include <cmath>
#include <fstream>
#include <utility>
#include <vector>

#include "latbench/error.hpp"

namespace latbench::vehicle {
namespace {

using Field = std::pair<const char*, double VehicleParams::*>;

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"m", &VehicleParams::m},
      {"I_z", &VehicleParams::I_z},
      {"C_f", &VehicleParams::C_f},
      {"C_r", &VehicleParams::C_r},
      {"l_f", &VehicleParams::l_f},
      {"l_r", &VehicleParams::l_r},
      {"J_s", &VehicleParams::J_s},
      {"B_u", &VehicleParams::B_u},
      {"R_S", &VehicleParams::R_S},
      {"delta_max", &VehicleParams::delta_max},
      {"delta_dot_max", &VehicleParams::delta_dot_max},
      {"mu", &VehicleParams::mu},
      {"a3", &VehicleParams::a3},
      {"g", &VehicleParams::g},
      {"pneumatic_trail", &VehicleParams::pneumatic_trail},
  };
  return table;
}

}  // namespace

void VehicleParams::validate() const {
  for (const auto& [name, member] : fields()) {
    if (!std::isfinite(this->*member)) throw ConfigError(name, "must be finite");
  }
  const std::pair<const char*, double> positive[] = {
      {"m", m},         {"I_z", I_z}, {"C_f", C_f}, {"C_r", C_r},
      {"l_f", l_f},     {"l_r", l_r}, {"J_s", J_s}, {"R_S", R_S},
      {"delta_max", delta_max}, {"delta_dot_max", delta_dot_max},
      {"a3", a3},       {"g", g},
  };
  for (const auto& [name, value] : positive) {
    if (!(value > 0.0)) throw ConfigError(name, "must be > 0");
  }
  if (B_u < 0.0) throw ConfigError("B_u", "must be >= 0");
  if (pneumatic_trail < 0.0) throw ConfigError("pneumatic_trail", "must be >= 0");
  if (!(mu > 0.0 && mu <= 1.5)) throw ConfigError("mu", "must lie in (0, 1.5]");
}

VehicleParams vehicle_params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "vehicle parameters must be a JSON object");
  VehicleParams p;
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const auto& [name, member] : fields()) {
      if (key != name) continue;
      if (!value.is_number()) throw ConfigError(key, "must be a number");
      p.*member = value.get<double>();
      known = true;
      break;
    }
    if (!known) throw ConfigError(key, "unknown vehicle parameter");
  }
  p.validate();
  return p;
}

nlohmann::json to_json(const VehicleParams& params) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [name, member] : fields()) doc[name] = params.*member;
  return doc;
}

VehicleParams load_vehicle_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open vehicle parameter file");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path, e.what());
  }
  return vehicle_params_from_json(doc);
}

}  // namespace latbench::vehicle
