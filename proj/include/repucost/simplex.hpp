#pragma once

#include <Eigen/Dense>

namespace repu {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;       // primal solution
  Eigen::VectorXd duals;   // y with A^T y <= cost at optimality
  double objective = 0.0;
  int iterations = 0;
};

// Solves min cost^T x subject to A x = rhs, x >= 0 with a two-phase revised simplex.
// Entering variable: most negative reduced cost, lowest index on ties; after a run of
// degenerate pivots the rule switches to Bland's to rule out cycling. Deterministic.
LpResult solve_standard_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs, const Eigen::VectorXd& cost,
                           int max_iterations = 100000);

}  // namespace repu
