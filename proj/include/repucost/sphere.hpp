#pragma once

#include <Eigen/Dense>
#include <vector>

namespace repu {

// Surface area of the unit sphere S^{d-1} in R^d (2 for d = 1).
double sphere_area(int dim);

// Quadrature rule on S^{d-1}: one node per row of `nodes`.
struct SphereQuadrature {
  int dim = 0;
  Eigen::MatrixXd nodes;    // N x d, unit rows
  Eigen::VectorXd weights;  // N
  std::vector<int> antipode;  // index of -w_i, or -1 when absent

  int size() const { return static_cast<int>(nodes.rows()); }
  bool reflection_closed() const;
  // Validates unit rows and that the weights sum to the sphere area within 1e-6.
  void validate() const;
};

// {+1, -1} with unit weights.
SphereQuadrature line_directions();
// Fibonacci lattice on S^2 with equal weights 4*pi/n. The upper half of the lattice is
// mirrored through the origin so every node has its antipode; n must be even.
SphereQuadrature fibonacci_sphere(int n);
// Builds a rule from explicit nodes and weights and pairs antipodes by exact negation.
SphereQuadrature make_sphere_quadrature(const Eigen::MatrixXd& nodes, const Eigen::VectorXd& weights);

// Uniform grid -B, -B+h, ..., B on the offset axis.
struct OffsetGrid {
  double half_width = 0.0;  // B
  double spacing = 0.0;     // h
  int count = 0;

  OffsetGrid() = default;
  OffsetGrid(double B, double h);
  double node(int j) const { return -half_width + j * spacing; }
  double trapezoid_weight(int j) const {
    return (j == 0 || j == count - 1) ? 0.5 * spacing : spacing;
  }
  int mirror(int j) const { return count - 1 - j; }
};

// Tensor grid on [lo, hi]^d with n nodes per axis.
struct CubeGrid {
  int dim = 3;
  double lo = -1.0;
  double hi = 1.0;
  int n = 2;

  double spacing() const { return (hi - lo) / (n - 1); }
  double coord(int i) const { return lo + i * spacing(); }
  long long total() const;
  // Points in row-major order (last axis fastest), one per row.
  Eigen::MatrixXd points() const;
};

}  // namespace repu
