#include "latbench/numerics/dare.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "latbench/error.hpp"

namespace latbench::numerics {

double spectral_radius(const Eigen::MatrixXd& M) {
  if (M.size() == 0) return 0.0;
  return M.eigenvalues().cwiseAbs().maxCoeff();
}

DareSolution solve_dare(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                        const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R,
                        const DareOptions& options) {
  const Eigen::Index n = A.rows();
  const Eigen::Index m = B.cols();
  if (A.cols() != n || B.rows() != n || Q.rows() != n || Q.cols() != n || R.rows() != m ||
      R.cols() != m) {
    throw ArgumentError("solve_dare: inconsistent matrix dimensions");
  }
  if ((R - R.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + R.cwiseAbs().maxCoeff())) {
    throw ArgumentError("solve_dare: R must be symmetric");
  }
  if (Eigen::LLT<Eigen::MatrixXd>(R).info() != Eigen::Success) {
    throw ArgumentError("solve_dare: R must be positive definite");
  }

  const Eigen::MatrixXd At = A.transpose();
  const Eigen::MatrixXd Bt = B.transpose();
  Eigen::MatrixXd P = 0.5 * (Q + Q.transpose());
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Eigen::MatrixXd BtP = Bt * P;
    const Eigen::LDLT<Eigen::MatrixXd> S(R + BtP * B);
    const Eigen::MatrixXd K = S.solve(BtP * A);
    Eigen::MatrixXd next = Q + At * P * A - At * P * B * K;
    next = 0.5 * (next + next.transpose());
    if (!next.allFinite()) throw SolverError("solve_dare: iteration diverged");
    const double change = (next - P).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, next.cwiseAbs().maxCoeff());
    P = std::move(next);
    if (change <= options.tolerance * scale) {
      const Eigen::MatrixXd BtPf = Bt * P;
      Eigen::MatrixXd gain = Eigen::LDLT<Eigen::MatrixXd>(R + BtPf * B).solve(BtPf * A);
      if (spectral_radius(A - B * gain) >= 1.0) {
        throw SolverError("solve_dare: converged solution is not stabilizing");
      }
      return DareSolution{std::move(P), std::move(gain), it};
    }
  }
  throw SolverError("solve_dare: no convergence within iteration budget");
}

}  // namespace latbench::numerics
