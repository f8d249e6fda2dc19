#pragma once

#include <Eigen/Dense>

#include "latbench/controllers/law.hpp"
#include "latbench/numerics/qp.hpp"

namespace latbench::controllers {

/// x[k+1] = A x[k] + b u[k] + c, y = C x, for the normalized feedback u with
/// the feedforward and road-curvature inputs folded into c.
struct MpcModel {
  Eigen::Matrix4d A;
  Eigen::Vector4d b;
  Eigen::Vector4d c;
  Eigen::RowVector4d C;
};

/// Error model at v_x discretized by zero-order hold. The output is the
/// deviation at preview distance d_p, y = e_y + d_p e_psi.
MpcModel mpc_model(double v_x, double u_ff, double kappa, double preview_distance,
                   const vehicle::VehicleParams& vehicle, double sample_time = kControlPeriod);

/// Stacked outputs y[1..h_p] = Phi x0 + Gamma z + offset, where z holds the
/// h_c free moves and later moves repeat the last one.
struct MpcPrediction {
  Eigen::MatrixXd Phi;
  Eigen::MatrixXd Gamma;
  Eigen::VectorXd offset;
};
MpcPrediction build_prediction(const MpcModel& model, int h_p, int h_c);

/// QP in z: ||y||^2 + w sum (z_i - z_{i-1})^2 with z_{-1} = u_prev, subject to
/// |z_i| <= 1 and |z_i - z_{i-1}| <= rate_limit. Objective scaled by 1/2.
numerics::QpProblem mpc_qp(const MpcPrediction& prediction, const Eigen::Vector4d& x0, double u_prev,
                           double w_udot, double rate_limit);

/// Projects a move sequence onto the box and rate constraints in order.
Eigen::VectorXd project_moves(const Eigen::VectorXd& z, double u_prev, double rate_limit);

/// Per-tick normalized rate limit delta_dot_max Ts / delta_max.
double normalized_rate_limit(const vehicle::VehicleParams& vehicle, double sample_time = kControlPeriod);

/// LTV predictive law: the model is relinearized at the current speed,
/// held over the horizon and solved with a capped active-set QP warm-started
/// from the shifted previous sequence.
class NlmpcLaw final : public FeedbackLaw {
 public:
  NlmpcLaw(const NlmpcParams& params, const vehicle::VehicleParams& vehicle, double sample_time = kControlPeriod,
           int max_iterations = 10);

  double step(const ControlInputs& in) override;
  void reset() override;

  const Eigen::VectorXd& last_sequence() const { return sequence_; }
  const numerics::QpResult& last_result() const { return result_; }

 private:
  NlmpcParams params_;
  vehicle::VehicleParams vehicle_;
  double sample_time_;
  int max_iterations_;
  Eigen::VectorXd sequence_;
  numerics::QpResult result_;
  double last_u_ = 0.0;
};

}  // namespace latbench::controllers
