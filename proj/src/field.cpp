#include "repucost/field.hpp"

#include <cmath>
#include <memory>

#include "repucost/error.hpp"

namespace repu {

double generalized_laguerre(int n, double alpha, double u) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 1.0 + alpha - u;
  for (int k = 1; k < n; ++k) {
    double next = ((2.0 * k + 1.0 + alpha - u) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

ScalarField ScalarField::laplacian_iterate(int k) const {
  if (k == 0) return *this;
  if (!has_laplacian()) throw Error("field has no closed-form Laplacian");
  ScalarField out = *this;
  auto lap = laplacian_power;
  out.value = [lap, k](const double* x) { return lap(k, x); };
  out.laplacian_power = [lap, k](int j, const double* x) { return lap(k + j, x); };
  out.description = description + " (Laplacian^" + std::to_string(k) + ")";
  return out;
}

namespace {

// Delta^k of P(y) exp(-|y|^2/(2 s^2)) with P harmonic homogeneous of degree l is
// P(y) * s^(-2k) (-2)^k k! L_k^(d/2 + l - 1)(|y|^2/(2 s^2)) exp(-|y|^2/(2 s^2)).
double component_value(const GaussianComponent& g, int dim, int k, const double* x) {
  double r2 = 0.0;
  for (int j = 0; j < dim; ++j) {
    double y = x[j] - g.center[j];
    r2 += y * y;
  }
  double s2 = g.sigma * g.sigma;
  double u = r2 / (2.0 * s2);
  double poly = 1.0;
  int degree = 0;
  if (g.harmonic) {
    double y0 = x[0] - g.center[0], y1 = x[1] - g.center[1];
    poly = y0 * y0 - y1 * y1;
    degree = 2;
  }
  double radial = 1.0;
  if (k > 0) {
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    radial = std::pow(-2.0 / s2, k) * fact * generalized_laguerre(k, 0.5 * dim + degree - 1.0, u);
  }
  return g.weight * poly * radial * std::exp(-u);
}

}  // namespace

ScalarField gaussian_mixture_field(int dim, std::vector<GaussianComponent> parts) {
  if (dim < 1) throw Error("dimension must be positive");
  double radius = 0.0;
  for (auto& g : parts) {
    if (g.center.size() == 0) g.center = Eigen::VectorXd::Zero(dim);
    if (g.center.size() != dim) throw Error("Gaussian center has wrong dimension");
    if (!(g.sigma > 0.0)) throw Error("Gaussian width must be positive");
    if (g.harmonic && dim < 2) throw Error("harmonic Gaussian needs dimension >= 2");
    // exp(-u) < 1e-16 once u > 37; the polynomial factors add a little margin.
    radius = std::max(radius, g.center.norm() + 9.0 * g.sigma);
  }
  auto shared = std::make_shared<const std::vector<GaussianComponent>>(std::move(parts));
  ScalarField f;
  f.dim = dim;
  f.radius = radius;
  f.value = [shared, dim](const double* x) {
    double s = 0.0;
    for (const auto& g : *shared) s += component_value(g, dim, 0, x);
    return s;
  };
  f.laplacian_power = [shared, dim](int k, const double* x) {
    double s = 0.0;
    for (const auto& g : *shared) s += component_value(g, dim, k, x);
    return s;
  };
  f.description = "gaussian mixture (" + std::to_string(shared->size()) + " components)";
  return f;
}

ScalarField standard_gaussian_field(int dim) {
  GaussianComponent g;
  g.center = Eigen::VectorXd::Zero(dim);
  ScalarField f = gaussian_mixture_field(dim, {g});
  f.description = "standard gaussian";
  return f;
}

ScalarField zero_field(int dim) {
  ScalarField f;
  f.dim = dim;
  f.radius = 1.0;
  f.value = [](const double*) { return 0.0; };
  f.laplacian_power = [](int, const double*) { return 0.0; };
  f.description = "zero";
  return f;
}

ScalarField scaled_field(const ScalarField& f, double factor) {
  ScalarField out = f;
  auto value = f.value;
  out.value = [value, factor](const double* x) { return factor * value(x); };
  if (f.has_laplacian()) {
    auto lap = f.laplacian_power;
    out.laplacian_power = [lap, factor](int k, const double* x) { return factor * lap(k, x); };
  }
  return out;
}

}  // namespace repu
