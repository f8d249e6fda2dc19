#include "latbench/numerics/qp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "latbench/error.hpp"

namespace latbench::numerics {

double qp_objective(const QpProblem& problem, const Eigen::VectorXd& x) {
  return 0.5 * x.dot(problem.H * x) + problem.f.dot(x);
}

QpResult solve_qp(const QpProblem& problem, const Eigen::VectorXd& feasible_start,
                  const QpOptions& options) {
  const Eigen::Index n = problem.H.rows();
  const Eigen::Index m = problem.A.rows();
  if (problem.H.cols() != n || problem.f.size() != n || feasible_start.size() != n) {
    throw ArgumentError("qp: objective dimensions disagree");
  }
  if ((m > 0 && problem.A.cols() != n) || problem.b.size() != m) {
    throw ArgumentError("qp: constraint dimensions disagree");
  }
  if (options.max_iterations < 1) throw ArgumentError("qp: max_iterations must be >= 1");

  const Eigen::LLT<Eigen::MatrixXd> chol(problem.H);
  if (chol.info() != Eigen::Success) throw ArgumentError("qp: H is not positive definite");

  const double tol = options.feasibility_tolerance;
  Eigen::VectorXd x = feasible_start;
  if (m > 0 && ((problem.A * x - problem.b).array() > tol).any()) {
    throw ArgumentError("qp: start point violates the constraints");
  }

  std::vector<Eigen::Index> working;
  QpResult result;
  result.multipliers = Eigen::VectorXd::Zero(m);
  result.status = QpStatus::kIterationLimit;

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    result.iterations = iter;
    const Eigen::VectorXd g = problem.H * x + problem.f;
    const auto w = static_cast<Eigen::Index>(working.size());

    // Equality-constrained step via the Schur complement of H.
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(w);
    Eigen::VectorXd p;
    if (w == 0) {
      p = -chol.solve(g);
    } else {
      Eigen::MatrixXd Aw(w, n);
      for (Eigen::Index i = 0; i < w; ++i) Aw.row(i) = problem.A.row(working[i]);
      const Eigen::MatrixXd HiAt = chol.solve(Aw.transpose());
      const Eigen::VectorXd Hig = chol.solve(g);
      const Eigen::MatrixXd S = Aw * HiAt;
      lambda = S.ldlt().solve(-Aw * Hig);
      p = -(Hig + HiAt * lambda);
    }

    const double step_scale = std::max(1.0, x.lpNorm<Eigen::Infinity>());
    if (p.lpNorm<Eigen::Infinity>() <= 1e-12 * step_scale) {
      Eigen::Index drop = -1;
      double most_negative = -1e-12;
      for (Eigen::Index i = 0; i < w; ++i) {
        if (lambda[i] < most_negative) {
          most_negative = lambda[i];
          drop = i;
        }
      }
      if (drop < 0) {
        result.status = QpStatus::kOptimal;
        for (Eigen::Index i = 0; i < w; ++i) result.multipliers[working[i]] = lambda[i];
        break;
      }
      working.erase(working.begin() + drop);
      continue;
    }

    double alpha = 1.0;
    Eigen::Index blocking = -1;
    for (Eigen::Index j = 0; j < m; ++j) {
      bool in_working = false;
      for (auto k : working) in_working = in_working || (k == j);
      if (in_working) continue;
      const double ap = problem.A.row(j).dot(p);
      if (ap <= 1e-14) continue;
      const double slack = std::max(0.0, problem.b[j] - problem.A.row(j).dot(x));
      const double limit = slack / ap;
      if (limit < alpha) {
        alpha = limit;
        blocking = j;
      }
    }
    x += alpha * p;
    if (blocking >= 0) working.push_back(blocking);
  }

  result.x = x;
  result.objective = qp_objective(problem, x);
  return result;
}

}  // namespace latbench::numerics
