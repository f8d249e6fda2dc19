#include <unsupported/Eigen/MatrixFunctions>

#include "latbench/error.hpp"
#include "latbench/numerics/state_space.hpp"

namespace latbench::numerics {

void StateSpaceModel::validate() const {
  if (A.rows() != A.cols()) throw ArgumentError("state-space A must be square");
  if (B.rows() != A.rows()) throw ArgumentError("state-space B rows must match A");
  if (sample_time && !(*sample_time > 0.0)) throw ArgumentError("sample time must be positive");
}

StateSpaceModel discretize_zoh(const StateSpaceModel& continuous, double sample_time) {
  continuous.validate();
  if (continuous.discrete()) throw ArgumentError("discretize_zoh: model is already discrete");
  if (!(sample_time > 0.0)) throw ArgumentError("discretize_zoh: sample time must be positive");
  const Eigen::Index n = continuous.A.rows();
  const Eigen::Index m = continuous.B.cols();
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = continuous.A * sample_time;
  aug.topRightCorner(n, m) = continuous.B * sample_time;
  const Eigen::MatrixXd phi = aug.exp();
  return StateSpaceModel{phi.topLeftCorner(n, n), phi.topRightCorner(n, m), sample_time};
}

}  // namespace latbench::numerics
