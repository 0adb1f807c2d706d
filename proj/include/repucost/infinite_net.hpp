#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "repucost/measure.hpp"

namespace repu {

// H(x) = int ([<w,x> - b]_+^p - [-b]_+^p) / psi(b) dmu(w,b) + sum_k <v_k, x^k> + c.
struct InfiniteNet {
  Measure mu = AtomicMeasure(1);
  double c = 0.0;
  int p = 1;
  std::optional<Eigen::MatrixXd> v;  // d x p

  int dim() const { return measure_dim(mu); }
  void validate() const;
};

double eval_H(const InfiniteNet& net, const Eigen::Ref<const Eigen::VectorXd>& x);
// One value per row of xs. Grid measures go through per-direction prefix sums of offset
// moments, so the cost per point is O(directions * p) instead of O(directions * offsets).
Eigen::VectorXd eval_H_rows(const InfiniteNet& net, const Eigen::Ref<const Eigen::MatrixXd>& xs);

// Copy with c set so that H(0) = target (the integrand vanishes at 0).
InfiniteNet eval_H_normalized_at_zero(const InfiniteNet& net, double target);

struct LaplacianIdentityReport {
  int p = 1;
  int laplacian_power = 1;  // (p + 1) / 2
  long long nodes = 0;
  double max_abs_error = 0.0;
  double reference_scale = 0.0;  // max |p! R*(mu/psi)|
  double max_rel_error = 0.0;
};

// Compares Delta^((p+1)/2) H (finite differences of eval_H on x_grid) with p! R*(mu/psi).
// mu must be even.
LaplacianIdentityReport laplacian_identity_check(const GridMeasure& mu, int p, const CubeGrid& x_grid);

}  // namespace repu
