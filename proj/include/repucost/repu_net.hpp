#pragma once

#include <Eigen/Dense>

#include "repucost/measure.hpp"

namespace repu {

// g(x) = sum_i a_i [<w_i, x> - b_i]_+^p + c, rows of W are the w_i.
struct RepuNet {
  int p = 1;
  Eigen::MatrixXd W;  // k x d
  Eigen::VectorXd b;
  Eigen::VectorXd a;
  double c = 0.0;

  int width() const { return static_cast<int>(W.rows()); }
  int dim() const { return static_cast<int>(W.cols()); }
  void validate() const;
};

// Adds sum_k <v_k, x^k> (coordinatewise powers) to a RePU net. Column k-1 of v holds v_k.
struct MonomialNet {
  RepuNet base;
  Eigen::MatrixXd v;  // d x p

  void validate() const;
};

double repu(double t, int p);

double eval(const RepuNet& net, const Eigen::Ref<const Eigen::VectorXd>& x);
double eval(const MonomialNet& net, const Eigen::Ref<const Eigen::VectorXd>& x);
// One output per row of xs.
Eigen::VectorXd eval_rows(const RepuNet& net, const Eigen::Ref<const Eigen::MatrixXd>& xs);

struct CostBreakdown {
  double frobenius_term = 0.0;  // 0.5 * ||W||_F^2
  double outer_term = 0.0;      // 0.5 * sum |a_i|^(2/p)
  double balanced_cost = 0.0;   // sum |a_i|^(1/p) ||w_i||
  double canonical_cost = 0.0;  // sum |a_i|^(1/p) after canonicalize
  double total() const { return frobenius_term + outer_term; }
};

CostBreakdown cost(const RepuNet& net);

// Rescales every row to unit norm. Zero rows are folded into c and dropped.
RepuNet canonicalize(const RepuNet& net);
// Rescales each unit by r_i = sqrt(|a_i|^(1/p) / ||w_i||) so that |a_i|^(2/p) = ||w_i||^2.
// Units with a_i = 0 or w_i = 0 are left alone.
RepuNet balance(const RepuNet& net);
bool has_unit_rows(const RepuNet& net, double tol = 1e-12);

struct NetMeasure {
  AtomicMeasure measure;
  double c = 0.0;
};

// Atoms (w_i, b_i, a_i psi(b_i)) and c' = g(0). Requires unit rows.
NetMeasure to_measure(const RepuNet& net);

}  // namespace repu
