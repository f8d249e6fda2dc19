#include "latbench/controllers/feedforward.hpp"

#include <algorithm>
#include <cmath>

namespace latbench::controllers {

double feedforward(double kappa, const vehicle::VehicleParams& p) {
  return std::clamp(front_angle_to_normalized(std::atan(p.wheelbase() * kappa), p), -1.0, 1.0);
}

double normalized_to_front_angle(double u, const vehicle::VehicleParams& p) { return u * p.delta_max / p.R_S; }

double front_angle_to_normalized(double delta, const vehicle::VehicleParams& p) { return delta * p.R_S / p.delta_max; }

}  // namespace latbench::controllers
