#pragma once

#include <Eigen/Core>

namespace latbench::numerics {

struct DareOptions {
  double tolerance = 1e-12;  // relative change of P between sweeps
  int max_iterations = 100000;
};

struct DareSolution {
  Eigen::MatrixXd P;  // stabilizing solution
  Eigen::MatrixXd K;  // (R + B'PB)^-1 B'PA
  int iterations = 0;
};

/// Discrete-time algebraic Riccati equation by fixed-point (value) iteration
///   P <- Q + A'PA - A'PB (R + B'PB)^-1 B'PA,  starting from P = Q.
/// Throws ArgumentError for inconsistent sizes or a non-positive-definite R,
/// SolverError if the budget is exhausted or the closed loop is not stable.
DareSolution solve_dare(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                        const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R,
                        const DareOptions& options = {});

/// Largest eigenvalue modulus.
double spectral_radius(const Eigen::MatrixXd& M);

}  // namespace latbench::numerics
