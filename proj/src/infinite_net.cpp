#include "repucost/infinite_net.hpp"

#include <cmath>

#include "repucost/error.hpp"
#include "repucost/parallel.hpp"
#include "repucost/radon.hpp"
#include "repucost/repu_net.hpp"
#include "repucost/stencil.hpp"

namespace repu {

void InfiniteNet::validate() const {
  require_odd_power(p);
  if (v && (v->rows() != dim() || v->cols() != p)) throw Error("monomial coefficients must be d x p");
}

namespace {

double monomial_part(const InfiniteNet& net, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (!net.v) return 0.0;
  double s = 0.0;
  for (int k = 1; k <= net.p; ++k)
    for (Eigen::Index j = 0; j < x.size(); ++j) s += (*net.v)(j, k - 1) * std::pow(x[j], k);
  return s;
}

double unit_response(double t, double b, int p) { return repu(t - b, p) - repu(-b, p); }

double atomic_integral(const AtomicMeasure& mu, int p, const Eigen::Ref<const Eigen::VectorXd>& x) {
  WeightFn psi(p);
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += a.mass * unit_response(a.w.dot(x), a.b, p) / psi(a.b);
  return s;
}

double grid_integral_direct(const GridMeasure& mu, int p, const Eigen::Ref<const Eigen::VectorXd>& x) {
  WeightFn psi(p);
  double s = 0.0;
  for (int i = 0; i < mu.directions.size(); ++i) {
    double t = mu.directions.nodes.row(i).dot(x), inner = 0.0;
    for (int j = 0; j < mu.offsets.count; ++j) {
      double b = mu.offsets.node(j);
      inner += mu.offsets.trapezoid_weight(j) * mu.density(i, j) * unit_response(t, b, p) / psi(b);
    }
    s += mu.directions.weights[i] * inner;
  }
  return s;
}

// Per direction i and moment m: prefix[k] = sum_{j<k} q_ij (-b_j)^m with
// q_ij = weight_i * trapezoid_j * density_ij / psi(b_j). Then
// sum_{b_j <= t} q_ij (t - b_j)^p = sum_m C(p,m) t^(p-m) prefix_m[k(t)].
class GridEvaluator {
 public:
  GridEvaluator(const GridMeasure& mu, int p) : mu_(mu), p_(p) {
    WeightFn psi(p);
    const int nd = mu.directions.size(), nb = mu.offsets.count;
    prefix_.assign(static_cast<std::size_t>(nd) * (p + 1) * (nb + 1), 0.0);
    at_zero_.assign(nd, 0.0);
    for (int m = 0; m <= p; ++m) binom_.push_back(binomial(p, m));
    for (int i = 0; i < nd; ++i) {
      double* base = prefix_.data() + static_cast<std::size_t>(i) * (p + 1) * (nb + 1);
      for (int j = 0; j < nb; ++j) {
        double b = mu.offsets.node(j);
        double q = mu.directions.weights[i] * mu.offsets.trapezoid_weight(j) * mu.density(i, j) / psi(b);
        at_zero_[i] += q * repu(-b, p);
        double power = 1.0;
        for (int m = 0; m <= p; ++m) {
          base[m * (nb + 1) + j + 1] = base[m * (nb + 1) + j] + q * power;
          power *= -b;
        }
      }
    }
  }

  double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    const int nd = mu_.directions.size(), nb = mu_.offsets.count;
    const double B = mu_.offsets.half_width, h = mu_.offsets.spacing;
    double total = 0.0;
    for (int i = 0; i < nd; ++i) {
      double t = mu_.directions.nodes.row(i).dot(x);
      double u = std::floor((t + B) / h);
      int k = u < 0.0 ? 0 : (u >= nb - 1 ? nb : static_cast<int>(u) + 1);
      const double* base = prefix_.data() + static_cast<std::size_t>(i) * (p_ + 1) * (nb + 1);
      double s = 0.0, tp = 1.0;
      for (int m = p_; m >= 0; --m) {
        s += binom_[m] * tp * base[m * (nb + 1) + k];
        tp *= t;
      }
      total += s - at_zero_[i];
    }
    return total;
  }

 private:
  static double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
  }

  const GridMeasure& mu_;
  int p_;
  std::vector<double> prefix_;
  std::vector<double> at_zero_;
  std::vector<double> binom_;
};

}  // namespace

double eval_H(const InfiniteNet& net, const Eigen::Ref<const Eigen::VectorXd>& x) {
  net.validate();
  if (x.size() != net.dim()) throw Error("dimension mismatch");
  double integral = std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, AtomicMeasure>)
          return atomic_integral(m, net.p, x);
        else
          return grid_integral_direct(m, net.p, x);
      },
      net.mu);
  return integral + monomial_part(net, x) + net.c;
}

Eigen::VectorXd eval_H_rows(const InfiniteNet& net, const Eigen::Ref<const Eigen::MatrixXd>& xs) {
  net.validate();
  if (xs.cols() != net.dim()) throw Error("dimension mismatch");
  Eigen::VectorXd out(xs.rows());
  if (const auto* grid = std::get_if<GridMeasure>(&net.mu)) {
    GridEvaluator evaluator(*grid, net.p);
    parallel_for(xs.rows(), [&](std::size_t r) {
      Eigen::VectorXd x = xs.row(r).transpose();
      out[r] = evaluator(x) + monomial_part(net, x) + net.c;
    });
  } else {
    const auto& atoms = std::get<AtomicMeasure>(net.mu);
    parallel_for(xs.rows(), [&](std::size_t r) {
      Eigen::VectorXd x = xs.row(r).transpose();
      out[r] = atomic_integral(atoms, net.p, x) + monomial_part(net, x) + net.c;
    });
  }
  return out;
}

InfiniteNet eval_H_normalized_at_zero(const InfiniteNet& net, double target) {
  InfiniteNet out = net;
  out.c = target;
  return out;
}

LaplacianIdentityReport laplacian_identity_check(const GridMeasure& mu, int p, const CubeGrid& x_grid) {
  require_odd_power(p);
  if (mu.dim() % 2 == 0) throw Error("odd dimension required");
  if (x_grid.dim != mu.dim()) throw Error("dimension mismatch");
  if (!mu.directions.reflection_closed()) throw Error("grid not symmetric");
  double scale = mu.density.cwiseAbs().maxCoeff();
  for (int i = 0; i < mu.directions.size(); ++i)
    for (int j = 0; j < mu.offsets.count; ++j)
      if (std::abs(mu.density(i, j) - mu.density(mu.directions.antipode[i], mu.offsets.mirror(j))) >
          1e-10 * std::max(1.0, scale))
        throw Error("measure must be even");

  LaplacianIdentityReport rep;
  rep.p = p;
  rep.laplacian_power = (p + 1) / 2;
  rep.nodes = x_grid.total();

  InfiniteNet net;
  net.mu = mu;
  net.p = p;
  GridSamples samples;
  samples.grid = expand_grid(x_grid, 2 * rep.laplacian_power);
  samples.values = eval_H_rows(net, samples.grid.points());
  for (int k = 0; k < rep.laplacian_power; ++k) samples = laplacian_fd(samples);

  WeightFn psi(p);
  RadonImage weighted;
  weighted.directions = mu.directions;
  weighted.offsets = mu.offsets;
  weighted.values = mu.density;
  for (int j = 0; j < mu.offsets.count; ++j) weighted.values.col(j) /= psi(mu.offsets.node(j));
  weighted.even = true;
  double factorial = std::tgamma(p + 1.0);
  Eigen::VectorXd rhs = factorial * dual_radon_rows(weighted, x_grid.points());

  rep.max_abs_error = (samples.values - rhs).cwiseAbs().maxCoeff();
  rep.reference_scale = rhs.cwiseAbs().maxCoeff();
  rep.max_rel_error = rep.reference_scale > 0.0 ? rep.max_abs_error / rep.reference_scale : rep.max_abs_error;
  return rep;
}

}  // namespace repu
