#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "repucost/measure.hpp"
#include "repucost/piecewise_poly.hpp"
#include "repucost/repu_net.hpp"

namespace repu {

struct DiracAtom {
  double location = 0.0;
  double weight = 0.0;
};

struct DistributionalDerivative {
  PiecewisePoly1D regular_part;  // zero when the derivative is purely atomic
  std::vector<DiracAtom> atoms;
};

struct DerivativeData {
  PiecewisePoly1D pth;               // f^(p), piecewise constant
  DistributionalDerivative next;     // f^(p+1): jumps of f^(p)
  double limit_minus = 0.0;          // f^(p)(-inf)
  double limit_plus = 0.0;           // f^(p)(+inf)
};

// Throws "not RePU-representable at this p" for degree > p and when f is not C^(p-1).
DerivativeData distributional_derivatives(const PiecewisePoly1D& f, int p);

enum class LambdaCase { Zero, Negative, Positive };
std::string to_string(LambdaCase c);

struct CostReport {
  double integral_term = 0.0;  // (1/p!) int |f^(p+1)|
  double boundary_term = 0.0;  // (1/p!) |f^(p)(-inf) + f^(p)(+inf)|
  double cost = 0.0;           // max(...)^(1/p)
  LambdaCase active_case = LambdaCase::Zero;
};

CostReport cost_1d(const PiecewisePoly1D& f, int p);

// L1 program for the odd part of the representing measure. Node values m_i stand for
// mu_-/psi at offset b_i; target g_i = f^(p+1)/p! at breakpoints (0 elsewhere). The program is
// min sum_i max(|g_i|, |m_i|) subject to sum_i m_i b_i^j = moment_rhs[j], j = 0..p-1.
struct MomentL1Problem {
  int p = 1;
  std::vector<double> nodes;
  std::vector<double> target;
  std::vector<char> is_breakpoint;
  Eigen::MatrixXd constraints;  // p x nodes, row j holds b_i^j
  Eigen::VectorXd moment_rhs;
  Eigen::VectorXd solution;     // m_i
  Eigen::VectorXd multipliers;  // one per moment row, in unscaled units
  double objective = 0.0;       // sum max(|g_i|, |m_i|) at the solution
  double max_residual = 0.0;    // max |constraints * solution - moment_rhs|
  int iterations = 0;
};

// Exact right-hand sides M_0..M_{p-1} of the moment constraints.
Eigen::VectorXd moment_targets(const PiecewisePoly1D& f, int p);

// Builds and solves the program on the grid [-B, B] with spacing h, plus the breakpoints.
// Throws "increase truncation B" when the program is infeasible.
MomentL1Problem solve_moment_problem(const PiecewisePoly1D& f, int p, double B, double h);

struct OptimalMeasure {
  AtomicMeasure measure{1};
  double c = 0.0;
  CostReport report;
  MomentL1Problem problem;
  double achieved_norm = 0.0;  // weighted TV with 1/psi
  LambdaCase lp_case = LambdaCase::Zero;
};

OptimalMeasure build_optimal_measure(const PiecewisePoly1D& f, int p, double B = 8.0, double h = 0.01);

struct TheoremCheck {
  CostReport closed_form;
  double closed_form_value = 0.0;  // max(integral_term, boundary_term)
  double lp_value = 0.0;
  double rel_error = 0.0;
  LambdaCase lp_case = LambdaCase::Zero;
  double tolerance = 1e-4;
  bool passed = false;
};

TheoremCheck verify_theorem_1d(const PiecewisePoly1D& f, int p, double B = 8.0, double h = 0.01,
                               double tolerance = 1e-4);

// Exact piecewise form of a one-input RePU net (continuity p-1).
PiecewisePoly1D piecewise_from_net(const RepuNet& net);

// Least-squares fit of sum_k c_k x^k + sum_j d_j [x - t_j]_+^p to samples; C^(p-1) by construction.
PiecewisePoly1D fit_piecewise_poly(const std::vector<double>& xs, const std::vector<double>& ys,
                                   const std::vector<double>& breakpoints, int p);

}  // namespace repu
