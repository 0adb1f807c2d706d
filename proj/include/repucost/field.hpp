#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace repu {

// A function on R^d with an optional closed-form Laplacian iterate.
struct ScalarField {
  int dim = 3;
  std::function<double(const double*)> value;
  // laplacian_power(k, x) = (Delta^k f)(x); empty when no closed form is known.
  std::function<double(int, const double*)> laplacian_power;
  // |f(x)| = O(|x|^-decay_rate); infinity for faster-than-polynomial decay.
  double decay_rate = std::numeric_limits<double>::infinity();
  // |f| (and its Laplacian iterates) are negligible outside this ball.
  double radius = 8.0;
  std::string description;

  double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const { return value(x.data()); }
  bool has_laplacian() const { return static_cast<bool>(laplacian_power); }
  // Delta^k f as a field of its own; requires has_laplacian() for k > 0.
  ScalarField laplacian_iterate(int k) const;
};

// weight * P(x - center) * exp(-|x - center|^2 / (2 sigma^2)), where P is 1 or, with
// harmonic = true, the harmonic quadratic (x_1 - m_1)^2 - (x_2 - m_2)^2.
struct GaussianComponent {
  double weight = 1.0;
  Eigen::VectorXd center;
  double sigma = 1.0;
  bool harmonic = false;
};

ScalarField gaussian_mixture_field(int dim, std::vector<GaussianComponent> parts);
// exp(-|x|^2 / 2) in R^dim.
ScalarField standard_gaussian_field(int dim);
ScalarField zero_field(int dim);
ScalarField scaled_field(const ScalarField& f, double factor);

// Generalized Laguerre polynomial L_n^(alpha)(u).
double generalized_laguerre(int n, double alpha, double u);

}  // namespace repu
