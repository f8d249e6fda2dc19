#include "latbench/controllers/lqr.hpp"

#include <cmath>

#include "latbench/controllers/feedforward.hpp"
#include "latbench/error.hpp"
#include "latbench/numerics/dare.hpp"
#include "latbench/vehicle/error_model.hpp"

namespace latbench::controllers {

Eigen::RowVector4d lqr_gain(double v_x, const LqrParams& p, const vehicle::VehicleParams& vehicle,
                            double sample_time) {
  const numerics::StateSpaceModel d =
      numerics::discretize_zoh(vehicle::linearized_error_model(v_x, vehicle), sample_time);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(4, 4);
  Q.diagonal() << p.q1, p.q2, p.q3, p.q4;
  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(1, 1);
  const numerics::DareSolution sol = numerics::solve_dare(d.A, d.B, Q, R);
  return sol.K.row(0);
}

LqrLaw::LqrLaw(const LqrParams& params, const vehicle::VehicleParams& vehicle, double sample_time)
    : params_(params),
      vehicle_(vehicle),
      sample_time_(sample_time),
      d_ey_(params.N_LQR, sample_time),
      d_epsi_(params.N_LQR, sample_time) {}

void LqrLaw::reset() {
  d_ey_.reset();
  d_epsi_.reset();
  scheduled_speed_ = -1.0;
  gain_.setZero();
  last_u_ = 0.0;
}

double LqrLaw::step(const ControlInputs& in) {
  const double e_y = -in.y_1;
  Eigen::Vector4d x(e_y, d_ey_.step(e_y), in.e_psi, d_epsi_.step(in.e_psi));
  const double speed = std::max(in.v_x, kModelSpeedFloor);
  if (scheduled_speed_ < 0.0 || std::abs(speed - scheduled_speed_) > 0.5) {
    try {
      gain_ = lqr_gain(speed, params_, vehicle_, sample_time_);
      scheduled_speed_ = speed;
    } catch (const Error&) {
      ++faults_;
      return last_u_;
    }
  }
  last_u_ = front_angle_to_normalized(-(gain_ * x)(0), vehicle_);
  return last_u_;
}

}  // namespace latbench::controllers
