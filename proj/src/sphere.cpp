#include "repucost/sphere.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "repucost/error.hpp"

namespace repu {

double sphere_area(int dim) {
  if (dim < 1) throw Error("dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

bool SphereQuadrature::reflection_closed() const {
  for (int a : antipode)
    if (a < 0) return false;
  return !antipode.empty();
}

void SphereQuadrature::validate() const {
  if (nodes.cols() != dim || weights.size() != nodes.rows())
    throw Error("direction quadrature shape mismatch");
  for (int i = 0; i < size(); ++i)
    if (std::abs(nodes.row(i).norm() - 1.0) > 1e-12) throw Error("direction is not a unit vector");
  if (std::abs(weights.sum() - sphere_area(dim)) > 1e-6)
    throw Error("direction weights do not sum to the sphere area");
}

SphereQuadrature make_sphere_quadrature(const Eigen::MatrixXd& nodes, const Eigen::VectorXd& weights) {
  SphereQuadrature q;
  q.dim = static_cast<int>(nodes.cols());
  q.nodes = nodes;
  q.weights = weights;
  q.antipode.assign(nodes.rows(), -1);
  std::map<std::vector<double>, int> index;
  for (int i = 0; i < nodes.rows(); ++i) {
    std::vector<double> key(nodes.cols());
    for (int k = 0; k < nodes.cols(); ++k) key[k] = nodes(i, k) + 0.0;
    index.emplace(key, i);
  }
  for (int i = 0; i < nodes.rows(); ++i) {
    std::vector<double> key(nodes.cols());
    for (int k = 0; k < nodes.cols(); ++k) key[k] = -nodes(i, k) + 0.0;
    auto it = index.find(key);
    if (it != index.end()) q.antipode[i] = it->second;
  }
  q.validate();
  return q;
}

SphereQuadrature line_directions() {
  Eigen::MatrixXd n(2, 1);
  n << 1.0, -1.0;
  return make_sphere_quadrature(n, Eigen::VectorXd::Ones(2));
}

SphereQuadrature fibonacci_sphere(int n) {
  if (n < 2 || n % 2 != 0) throw Error("Fibonacci direction count must be even and >= 2");
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  const int half = n / 2;
  SphereQuadrature q;
  q.dim = 3;
  q.nodes.resize(n, 3);
  q.weights = Eigen::VectorXd::Constant(n, 4.0 * std::numbers::pi / n);
  q.antipode.resize(n);
  for (int i = 0; i < half; ++i) {
    double z = 1.0 - (2.0 * i + 1.0) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double theta = 2.0 * std::numbers::pi * i / golden;
    Eigen::Vector3d w(r * std::cos(theta), r * std::sin(theta), z);
    w.normalize();
    q.nodes.row(i) = w.transpose();
    q.nodes.row(i + half) = -w.transpose();
    q.antipode[i] = i + half;
    q.antipode[i + half] = i;
  }
  q.validate();
  return q;
}

OffsetGrid::OffsetGrid(double B, double h) : half_width(B), spacing(h) {
  if (!(B > 0.0) || !(h > 0.0)) throw Error("offset grid needs positive B and h");
  double steps = 2.0 * B / h;
  long long m = std::llround(steps);
  if (std::abs(steps - static_cast<double>(m)) > 1e-9 * std::max(1.0, steps))
    throw Error("offset half-width must be a multiple of the spacing");
  count = static_cast<int>(m) + 1;
}

long long CubeGrid::total() const {
  long long t = 1;
  for (int k = 0; k < dim; ++k) t *= n;
  return t;
}

Eigen::MatrixXd CubeGrid::points() const {
  if (n < 2) throw Error("cube grid needs at least two nodes per axis");
  Eigen::MatrixXd pts(total(), dim);
  for (long long idx = 0; idx < total(); ++idx) {
    long long rem = idx;
    for (int k = dim - 1; k >= 0; --k) {
      pts(idx, k) = coord(static_cast<int>(rem % n));
      rem /= n;
    }
  }
  return pts;
}

}  // namespace repu
