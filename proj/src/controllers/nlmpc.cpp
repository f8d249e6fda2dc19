#include "latbench/controllers/nlmpc.hpp"

#include <algorithm>
#include <cmath>

#include "latbench/controllers/feedforward.hpp"
#include "latbench/error.hpp"
#include "latbench/vehicle/error_model.hpp"

namespace latbench::controllers {

MpcModel mpc_model(double v_x, double u_ff, double kappa, double preview_distance,
                   const vehicle::VehicleParams& vehicle, double sample_time) {
  const numerics::StateSpaceModel ct = vehicle::linearized_error_model(v_x, vehicle);
  numerics::StateSpaceModel aug;
  aug.A = ct.A;
  aug.B.resize(4, 2);
  aug.B.col(0) = ct.B.col(0);
  aug.B.col(1) = vehicle::road_yaw_input(v_x, vehicle);
  const numerics::StateSpaceModel d = numerics::discretize_zoh(aug, sample_time);
  const double g = normalized_to_front_angle(1.0, vehicle);
  MpcModel m;
  m.A = d.A;
  m.b = g * d.B.col(0);
  m.c = g * u_ff * d.B.col(0) + v_x * kappa * d.B.col(1);
  m.C << 1.0, 0.0, preview_distance, 0.0;
  return m;
}

MpcPrediction build_prediction(const MpcModel& m, int h_p, int h_c) {
  if (h_p < 1 || h_c < 1 || h_c > h_p) throw ArgumentError("horizons must satisfy 1 <= h_c <= h_p");
  MpcPrediction p;
  p.Phi.resize(h_p, 4);
  p.Gamma = Eigen::MatrixXd::Zero(h_p, h_c);
  p.offset.resize(h_p);
  // Column j tracks the state response to a unit on move j (held after h_c).
  Eigen::Matrix4d Ai = Eigen::Matrix4d::Identity();
  Eigen::MatrixXd resp = Eigen::MatrixXd::Zero(4, h_c);
  Eigen::Vector4d free = Eigen::Vector4d::Zero();
  for (int i = 0; i < h_p; ++i) {
    // Step i applies move min(i, h_c - 1).
    resp = m.A * resp;
    resp.col(std::min(i, h_c - 1)) += m.b;
    free = m.A * free + m.c;
    Ai = m.A * Ai;
    p.Phi.row(i) = m.C * Ai;
    p.Gamma.row(i) = m.C * resp;
    p.offset(i) = m.C * free;
  }
  return p;
}

numerics::QpProblem mpc_qp(const MpcPrediction& pr, const Eigen::Vector4d& x0, double u_prev, double w_udot,
                           double rate_limit) {
  const Eigen::Index n = pr.Gamma.cols();
  Eigen::MatrixXd D = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 1; i < n; ++i) D(i, i - 1) = -1.0;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  d(0) = u_prev;
  numerics::QpProblem qp;
  qp.H = pr.Gamma.transpose() * pr.Gamma + w_udot * D.transpose() * D;
  qp.H.diagonal().array() += 1e-12;
  qp.f = pr.Gamma.transpose() * (pr.Phi * x0 + pr.offset) - w_udot * D.transpose() * d;
  qp.A = Eigen::MatrixXd::Zero(4 * n, n);
  qp.b.resize(4 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    qp.A(4 * i, i) = 1.0;
    qp.b(4 * i) = 1.0;
    qp.A(4 * i + 1, i) = -1.0;
    qp.b(4 * i + 1) = 1.0;
    qp.A(4 * i + 2, i) = 1.0;
    qp.A(4 * i + 3, i) = -1.0;
    if (i == 0) {
      qp.b(2) = rate_limit + u_prev;
      qp.b(3) = rate_limit - u_prev;
    } else {
      qp.A(4 * i + 2, i - 1) = -1.0;
      qp.A(4 * i + 3, i - 1) = 1.0;
      qp.b(4 * i + 2) = rate_limit;
      qp.b(4 * i + 3) = rate_limit;
    }
  }
  return qp;
}

Eigen::VectorXd project_moves(const Eigen::VectorXd& z, double u_prev, double rate_limit) {
  Eigen::VectorXd out = z;
  double prev = std::clamp(u_prev, -1.0, 1.0);
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double lo = std::max(-1.0, prev - rate_limit);
    const double hi = std::min(1.0, prev + rate_limit);
    out(i) = std::clamp(z(i), lo, hi);
    prev = out(i);
  }
  return out;
}

double normalized_rate_limit(const vehicle::VehicleParams& vehicle, double sample_time) {
  return vehicle.delta_dot_max * sample_time / vehicle.delta_max;
}

NlmpcLaw::NlmpcLaw(const NlmpcParams& params, const vehicle::VehicleParams& vehicle, double sample_time,
                   int max_iterations)
    : params_(params), vehicle_(vehicle), sample_time_(sample_time), max_iterations_(max_iterations) {}

void NlmpcLaw::reset() {
  sequence_.resize(0);
  result_ = {};
  last_u_ = 0.0;
}

double NlmpcLaw::step(const ControlInputs& in) {
  const double u_prev = std::clamp(in.u_prev, -1.0, 1.0);
  const double rate = normalized_rate_limit(vehicle_, sample_time_);
  try {
    const double speed = std::max(in.v_x, kModelSpeedFloor);
    const MpcModel model = mpc_model(speed, in.u_ff, in.kappa, in.preview_distance, vehicle_, sample_time_);
    const MpcPrediction pred = build_prediction(model, params_.h_p, params_.h_c);
    const Eigen::Vector4d x0(in.e_y, in.e_y_rate, in.e_psi, in.e_psi_rate);
    const numerics::QpProblem qp = mpc_qp(pred, x0, u_prev, params_.w_udot, rate);

    Eigen::VectorXd warm = Eigen::VectorXd::Constant(params_.h_c, u_prev);
    if (sequence_.size() == params_.h_c) {
      warm.head(params_.h_c - 1) = sequence_.tail(params_.h_c - 1);
      warm(params_.h_c - 1) = sequence_(params_.h_c - 1);
    }
    warm = project_moves(warm, u_prev, rate);
    numerics::QpOptions opts;
    opts.max_iterations = max_iterations_;
    result_ = numerics::solve_qp(qp, warm, opts);
    sequence_ = result_.x;
    last_u_ = sequence_(0);
  } catch (const Error&) {
    ++faults_;
    sequence_.resize(0);
  }
  return last_u_;
}

}  // namespace latbench::controllers
