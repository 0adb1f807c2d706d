#include "repucost/rnorm.hpp"

#include <cmath>
#include <numbers>

#include "repucost/error.hpp"
#include "repucost/measure.hpp"
#include "repucost/stencil.hpp"

namespace repu {

namespace {

void require_odd_odd(int d, int p) {
  if (d < 1 || d % 2 == 0 || p < 1 || p % 2 == 0) throw Error("odd-odd case only");
}

double factorial(int n) { return std::tgamma(n + 1.0); }

double image_tv(const RadonImage& img) {
  Eigen::VectorXd offset_weight(img.offsets.count);
  for (int j = 0; j < img.offsets.count; ++j) offset_weight[j] = img.offsets.trapezoid_weight(j);
  return img.directions.weights.dot(img.values.cwiseAbs() * offset_weight);
}

double hermite_he(int n, double x) {
  double prev = 1.0, cur = x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// 1 on |b| <= 0.6 B, cosine taper to 0 at 0.9 B.
double offset_window(double b, double B) {
  double a = std::abs(b) / B;
  if (a <= 0.6) return 1.0;
  if (a >= 0.9) return 0.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * (a - 0.6) / 0.3));
}

}  // namespace

RNormReport rnorm_direct_from_image(const RadonImage& radon_f, int p) {
  const int d = radon_f.dim();
  require_odd_odd(d, p);
  RadonImage deriv = differentiate_offsets(radon_f, d + p);
  double value = inversion_constant(d) / factorial(p) * image_tv(deriv);
  RNormReport rep;
  rep.p = p;
  rep.dim = d;
  rep.direct_value = std::pow(value, 1.0 / p);
  rep.rnorm_value = std::pow(factorial(p), 1.0 / p) * *rep.direct_value;
  rep.directions = radon_f.directions.size();
  rep.offset_half_width = radon_f.offsets.half_width;
  rep.offset_spacing = radon_f.offsets.spacing;
  return rep;
}

RNormReport rnorm_direct(const ScalarField& f, int p, const RNormGrid& grid) {
  require_odd_odd(f.dim, p);
  return rnorm_direct_from_image(radon(f, grid.directions, grid.offsets, grid.plane), p);
}

std::vector<RadonImage> default_dictionary(const SphereQuadrature& dirs, const OffsetGrid& offsets,
                                           const DictionaryOptions& options) {
  const int d = dirs.dim;
  // Spherical factors with sup 1, grouped by parity of the degree.
  std::vector<std::function<double(const Eigen::RowVectorXd&)>> even_y{[](const Eigen::RowVectorXd&) { return 1.0; }};
  std::vector<std::function<double(const Eigen::RowVectorXd&)>> odd_y;
  for (int k = 0; k < d; ++k) odd_y.push_back([k](const Eigen::RowVectorXd& w) { return w[k]; });
  if (d >= 3) {
    even_y.push_back([](const Eigen::RowVectorXd& w) { return 0.5 * (3.0 * w[2] * w[2] - 1.0); });
    even_y.push_back([](const Eigen::RowVectorXd& w) { return w[0] * w[0] - w[1] * w[1]; });
    even_y.push_back([](const Eigen::RowVectorXd& w) { return 2.0 * w[0] * w[1]; });
  }

  const int nb = offsets.count;
  std::vector<RadonImage> out;
  for (int n = 0; n <= options.max_hermite_order; ++n) {
    for (double s : options.scales) {
      Eigen::VectorXd base(nb);
      for (int j = 0; j < nb; ++j) {
        double u = offsets.node(j) / s;
        base[j] = hermite_he(n, u) * std::exp(-0.25 * u * u);
      }
      base /= base.cwiseAbs().maxCoeff();
      for (double kappa : options.sharpness) {
        Eigen::VectorXd profile(nb);
        for (int j = 0; j < nb; ++j) {
          double v = kappa > 0.0 ? std::tanh(kappa * base[j]) / std::tanh(kappa) : base[j];
          profile[j] = v * offset_window(offsets.node(j), offsets.half_width);
        }
        // Rounding can push the odd-order profile a hair off exact antisymmetry; symmetrize.
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        Eigen::VectorXd raw = profile;
        for (int j = 0; j < nb; ++j)
          profile[j] = std::clamp(0.5 * (raw[j] + sign * raw[offsets.mirror(j)]), -1.0, 1.0);
        const auto& ys = n % 2 == 0 ? even_y : odd_y;
        for (const auto& y : ys) {
          RadonImage img;
          img.directions = dirs;
          img.offsets = offsets;
          img.values.resize(dirs.size(), nb);
          for (int i = 0; i < dirs.size(); ++i) {
            double yw = y(dirs.nodes.row(i));
            img.values.row(i) = yw * profile.transpose();
          }
          img.even = true;
          out.push_back(std::move(img));
        }
      }
    }
  }
  return out;
}

RadonImage near_optimal_test_function(const RadonImage& radon_f, int p, double sharpness) {
  const int d = radon_f.dim();
  require_odd_odd(d, p);
  RadonImage deriv = differentiate_offsets(radon_f, d + p);
  double peak = deriv.values.cwiseAbs().maxCoeff();
  RadonImage phi = deriv;
  if (peak > 0.0) phi.values = (sharpness * deriv.values / peak).array().tanh().matrix();
  else phi.values.setZero();
  // tanh amplifies rounding asymmetry of the spectral derivative; restore exact evenness.
  const Eigen::MatrixXd raw = phi.values;
  const int nb = phi.offsets.count;
  for (int i = 0; i < phi.directions.size(); ++i) {
    int a = phi.directions.antipode[i];
    if (a < 0) throw Error("direction set is not reflection closed");
    for (int j = 0; j < nb; ++j) phi.values(i, j) = 0.5 * (raw(i, j) + raw(a, phi.offsets.mirror(j)));
  }
  phi.even = true;
  return phi;
}

RNormReport rnorm_dual_estimate(const ScalarField& f, int p, const std::vector<RadonImage>& dictionary,
                                const CubeGrid& volume) {
  const int d = f.dim;
  require_odd_odd(d, p);
  if (volume.dim != d) throw Error("dimension mismatch");
  const int k = (d + p) / 2;

  for (const auto& phi : dictionary) {
    if (phi.dim() != d) throw Error("dimension mismatch");
    double sup = phi.values.cwiseAbs().maxCoeff();
    if (sup > 1.0 + 1e-9) throw Error("test function exceeds sup-norm bound 1");
    if (phi.evenness_defect() > 1e-9) throw Error("test function is not even");
  }

  RNormReport rep;
  rep.p = p;
  rep.dim = d;
  rep.dictionary_size = static_cast<int>(dictionary.size());

  // (-Delta)^k f on the volume points.
  GridSamples lap;
  if (f.has_laplacian()) {
    rep.pairing_route = "closed-form Laplacian of f";
    lap.grid = volume;
    Eigen::MatrixXd pts = volume.points();
    lap.values.resize(pts.rows());
    for (Eigen::Index r = 0; r < pts.rows(); ++r) lap.values[r] = f.laplacian_power(k, pts.row(r).transpose().eval().data());
  } else {
    rep.pairing_route = "finite-difference Laplacian of f";
    lap.grid = expand_grid(volume, 2 * k);
    Eigen::MatrixXd pts = lap.grid.points();
    lap.values.resize(pts.rows());
    for (Eigen::Index r = 0; r < pts.rows(); ++r) lap.values[r] = f(pts.row(r).transpose());
    for (int j = 0; j < k; ++j) lap = laplacian_fd(lap);
  }
  if (k % 2 == 1) lap.values = -lap.values;

  if (dictionary.empty()) {
    rep.dual_lower_bound = 0.0;
    return rep;
  }
  const double B = dictionary.front().offsets.half_width;
  Eigen::MatrixXd pts = volume.points();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < pts.rows(); ++r)
    if (pts.row(r).norm() <= B && lap.values[r] != 0.0) keep.push_back(r);
  Eigen::MatrixXd used(keep.size(), d);
  Eigen::VectorXd weight(keep.size());
  const double cell = std::pow(volume.spacing(), d);
  for (std::size_t q = 0; q < keep.size(); ++q) {
    used.row(q) = pts.row(keep[q]);
    weight[q] = lap.values[keep[q]] * cell;
  }

  const double scale = inversion_constant(d) / factorial(p);
  double best = 0.0;
  for (std::size_t m = 0; m < dictionary.size(); ++m) {
    double pairing = weight.dot(dual_radon_rows(dictionary[m], used));
    double candidate = std::abs(-scale * pairing);  // phi and -phi are both admissible
    if (candidate > best || rep.best_member < 0) {
      best = std::max(best, candidate);
      rep.best_member = static_cast<int>(m);
    }
  }
  rep.dual_lower_bound = std::pow(best, 1.0 / p);
  return rep;
}

double rnorm_of_net(const RepuNet& net) {
  NetMeasure nm = to_measure(net);
  auto parts = even_odd_decompose(nm.measure);
  WeightFn psi(net.p);
  return std::pow(weighted_tv_norm(parts.even, [&psi](double b) { return psi.inverse(b); }), 1.0 / net.p);
}

double rnorm_of_net(const MonomialNet& net) {
  net.validate();
  return rnorm_of_net(net.base);
}

}  // namespace repu
