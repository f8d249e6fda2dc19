#pragma once

#include <optional>

#include <Eigen/Core>

namespace latbench::numerics {

/// x' = A x + B u (continuous) or x[k+1] = A x[k] + B u[k] when sample_time is set.
struct StateSpaceModel {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  std::optional<double> sample_time;

  bool discrete() const { return sample_time.has_value(); }
  void validate() const;
};

/// Zero-order-hold discretization via the exponential of the augmented matrix.
StateSpaceModel discretize_zoh(const StateSpaceModel& continuous, double sample_time);

}  // namespace latbench::numerics
