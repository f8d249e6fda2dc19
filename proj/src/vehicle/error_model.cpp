#include "latbench/vehicle/error_model.hpp"

#include "latbench/error.hpp"

namespace latbench::vehicle {
namespace {

void require_speed(double v_x) {
  if (!(v_x > 0.5)) throw DegenerateSpeedError("error model needs v_x > 0.5 m/s");
}

}  // namespace

numerics::StateSpaceModel linearized_error_model(double v_x, const VehicleParams& p) {
  require_speed(v_x);
  const double cf = 2.0 * p.C_f;
  const double cr = 2.0 * p.C_r;
  const double m = p.m;
  const double iz = p.I_z;
  numerics::StateSpaceModel model;
  model.A = Eigen::MatrixXd::Zero(4, 4);
  model.A(0, 1) = 1.0;
  model.A(1, 1) = -(cf + cr) / (m * v_x);
  model.A(1, 2) = (cf + cr) / m;
  model.A(1, 3) = (-cf * p.l_f + cr * p.l_r) / (m * v_x);
  model.A(2, 3) = 1.0;
  model.A(3, 1) = -(cf * p.l_f - cr * p.l_r) / (iz * v_x);
  model.A(3, 2) = (cf * p.l_f - cr * p.l_r) / iz;
  model.A(3, 3) = -(cf * p.l_f * p.l_f + cr * p.l_r * p.l_r) / (iz * v_x);
  model.B = Eigen::MatrixXd::Zero(4, 1);
  model.B(1, 0) = cf / m;
  model.B(3, 0) = cf * p.l_f / iz;
  return model;
}

Eigen::Vector4d road_yaw_input(double v_x, const VehicleParams& p) {
  require_speed(v_x);
  const double cf = 2.0 * p.C_f;
  const double cr = 2.0 * p.C_r;
  Eigen::Vector4d e = Eigen::Vector4d::Zero();
  e(1) = (-cf * p.l_f + cr * p.l_r) / (p.m * v_x) - v_x;
  e(3) = -(cf * p.l_f * p.l_f + cr * p.l_r * p.l_r) / (p.I_z * v_x);
  return e;
}

}  // namespace latbench::vehicle
