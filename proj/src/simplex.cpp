#include "repucost/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "repucost/error.hpp"

namespace repu {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kCostTol = 1e-11;
constexpr int kDegenerateRun = 50;

struct Phase {
  const Eigen::MatrixXd& A;
  const Eigen::VectorXd& rhs;
  Eigen::VectorXd cost;
  std::vector<int> basis;
  std::vector<char> allowed;  // columns that may enter
  int iterations = 0;
};

// Returns Optimal, Unbounded or IterationLimit; basis is updated in place.
LpStatus run_phase(Phase& ph, int max_iterations) {
  const Eigen::Index m = ph.A.rows(), n = ph.A.cols();
  int degenerate = 0;
  while (ph.iterations < max_iterations) {
    Eigen::MatrixXd Bm(m, m);
    Eigen::VectorXd cb(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      Bm.col(r) = ph.A.col(ph.basis[r]);
      cb[r] = ph.cost[ph.basis[r]];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Bm);
    Eigen::VectorXd xb = lu.solve(ph.rhs);
    Eigen::VectorXd y = lu.transpose().solve(cb);
    Eigen::VectorXd reduced = ph.cost - ph.A.transpose() * y;

    std::vector<char> in_basis(n, 0);
    for (int b : ph.basis) in_basis[b] = 1;
    const bool bland = degenerate >= kDegenerateRun;
    Eigen::Index enter = -1;
    double best = -kCostTol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!ph.allowed[j] || in_basis[j]) continue;
      double scale = 1.0 + std::abs(ph.cost[j]);
      if (reduced[j] < -kCostTol * scale) {
        if (bland) {
          enter = j;
          break;
        }
        if (reduced[j] < best) {
          best = reduced[j];
          enter = j;
        }
      }
    }
    if (enter < 0) return LpStatus::Optimal;

    Eigen::VectorXd dir = lu.solve(ph.A.col(enter));
    Eigen::Index leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < m; ++r) {
      if (dir[r] <= kPivotTol) continue;
      double q = std::max(0.0, xb[r]) / dir[r];
      if (q < ratio - 1e-12 || (q <= ratio + 1e-12 && leave >= 0 && ph.basis[r] < ph.basis[leave])) {
        if (q < ratio) ratio = q;
        leave = r;
      }
    }
    if (leave < 0) return LpStatus::Unbounded;
    degenerate = ratio <= 1e-12 ? degenerate + 1 : 0;
    ph.basis[leave] = static_cast<int>(enter);
    ++ph.iterations;
  }
  return LpStatus::IterationLimit;
}

}  // namespace

LpResult solve_standard_lp(const Eigen::MatrixXd& A_in, const Eigen::VectorXd& rhs_in, const Eigen::VectorXd& cost,
                           int max_iterations) {
  const Eigen::Index m = A_in.rows(), n = A_in.cols();
  if (rhs_in.size() != m || cost.size() != n) throw Error("linear program shape mismatch");
  LpResult res;
  res.x = Eigen::VectorXd::Zero(n);
  res.duals = Eigen::VectorXd::Zero(m);
  if (m == 0) {
    if ((cost.array() < 0.0).any()) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    res.status = LpStatus::Optimal;
    return res;
  }

  // Rows flipped so rhs >= 0, then one artificial column per row.
  Eigen::MatrixXd A(m, n + m);
  Eigen::VectorXd rhs = rhs_in;
  A.leftCols(n) = A_in;
  for (Eigen::Index r = 0; r < m; ++r)
    if (rhs[r] < 0.0) {
      rhs[r] = -rhs[r];
      A.row(r).head(n) *= -1.0;
    }
  A.rightCols(m).setIdentity();

  Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n + m);
  phase1_cost.tail(m).setOnes();
  Phase ph{A, rhs, phase1_cost, {}, std::vector<char>(n + m, 1), 0};
  for (Eigen::Index r = 0; r < m; ++r) ph.basis.push_back(static_cast<int>(n + r));
  LpStatus st = run_phase(ph, max_iterations);
  if (st == LpStatus::IterationLimit) {
    res.status = st;
    res.iterations = ph.iterations;
    return res;
  }

  auto basic_values = [&](const std::vector<int>& basis) {
    Eigen::MatrixXd Bm(m, m);
    for (Eigen::Index r = 0; r < m; ++r) Bm.col(r) = A.col(basis[r]);
    return Eigen::VectorXd(Bm.partialPivLu().solve(rhs));
  };
  Eigen::VectorXd xb = basic_values(ph.basis);
  double infeasibility = 0.0;
  for (Eigen::Index r = 0; r < m; ++r)
    if (ph.basis[r] >= n) infeasibility += std::abs(xb[r]);
  if (infeasibility > 1e-9 * (1.0 + rhs.lpNorm<1>())) {
    res.status = LpStatus::Infeasible;
    res.iterations = ph.iterations;
    return res;
  }

  // Drive zero-level artificials out of the basis where a structural column can replace them.
  for (Eigen::Index r = 0; r < m; ++r) {
    if (ph.basis[r] < n) continue;
    Eigen::MatrixXd Bm(m, m);
    for (Eigen::Index q = 0; q < m; ++q) Bm.col(q) = A.col(ph.basis[q]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Bm);
    std::vector<char> in_basis(n + m, 0);
    for (int b : ph.basis) in_basis[b] = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (in_basis[j]) continue;
      Eigen::VectorXd dir = lu.solve(A.col(j));
      if (std::abs(dir[r]) > 1e-8) {
        ph.basis[r] = static_cast<int>(j);
        break;
      }
    }
  }

  // Phase II: artificials stay only where a row is redundant, pinned at zero.
  Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n + m);
  phase2_cost.head(n) = cost;
  ph.cost = phase2_cost;
  for (Eigen::Index j = n; j < n + m; ++j) ph.allowed[j] = 0;
  st = run_phase(ph, max_iterations);
  res.iterations = ph.iterations;
  if (st != LpStatus::Optimal) {
    res.status = st;
    return res;
  }

  Eigen::MatrixXd Bm(m, m);
  Eigen::VectorXd cb(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    Bm.col(r) = A.col(ph.basis[r]);
    cb[r] = phase2_cost[ph.basis[r]];
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Bm);
  xb = lu.solve(rhs);
  Eigen::VectorXd y = lu.transpose().solve(cb);
  for (Eigen::Index r = 0; r < m; ++r)
    if (ph.basis[r] < n) res.x[ph.basis[r]] = std::max(0.0, xb[r]);
  for (Eigen::Index r = 0; r < m; ++r) res.duals[r] = rhs_in[r] < 0.0 ? -y[r] : y[r];
  res.objective = cost.dot(res.x);
  res.status = LpStatus::Optimal;
  return res;
}

}  // namespace repu
