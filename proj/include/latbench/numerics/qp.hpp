#pragma once

#include <Eigen/Dense>

namespace latbench::numerics {

/// minimize 0.5 x'Hx + f'x subject to A x <= b.
/// H must be symmetric positive definite.
struct QpProblem {
  Eigen::MatrixXd H;
  Eigen::VectorXd f;
  Eigen::MatrixXd A;  // rows x n, may have zero rows
  Eigen::VectorXd b;
};

enum class QpStatus { kOptimal, kIterationLimit };

struct QpResult {
  Eigen::VectorXd x;
  Eigen::VectorXd multipliers;  // one per constraint row, zero when inactive
  QpStatus status = QpStatus::kOptimal;
  int iterations = 0;
  double objective = 0.0;
};

struct QpOptions {
  int max_iterations = 10;
  double feasibility_tolerance = 1e-9;
};

double qp_objective(const QpProblem& problem, const Eigen::VectorXd& x);

/// Primal active-set method started from a feasible point. On the iteration
/// limit the last iterate is returned; it is feasible and no worse than the
/// start. Throws ArgumentError for inconsistent dimensions, an infeasible
/// start, or an H that is not positive definite.
QpResult solve_qp(const QpProblem& problem, const Eigen::VectorXd& feasible_start,
                  const QpOptions& options = {});

}  // namespace latbench::numerics
