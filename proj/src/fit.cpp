#include "repucost/fit.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "repucost/parallel.hpp"

namespace repu {

namespace {

struct Params {
  Eigen::MatrixXd W;
  Eigen::VectorXd b, a;
  double c = 0.0;
};

struct Adam {
  Params m, v;
  int t = 0;
};

double regularizer(const Params& q, int p, double eps) {
  double s = q.W.squaredNorm();
  for (Eigen::Index i = 0; i < q.a.size(); ++i) s += std::pow(q.a[i] * q.a[i] + eps * eps, 1.0 / p);
  return 0.5 * s;
}

// Returns the mean squared error and fills the data-term gradient.
double mse_and_grad(const Params& q, int p, const Eigen::MatrixXd& x, const Eigen::VectorXd& y, Params& g) {
  const Eigen::Index n = x.rows(), k = q.W.rows();
  Eigen::MatrixXd z = x * q.W.transpose();
  z.rowwise() -= q.b.transpose();
  Eigen::MatrixXd act(n, k), slope(n, k);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index i = 0; i < k; ++i) {
      double t = z(r, i);
      if (t > 0.0) {
        double tp = 1.0;
        for (int e = 1; e < p; ++e) tp *= t;
        act(r, i) = tp * t;
        slope(r, i) = p * tp;
      } else {
        act(r, i) = 0.0;
        slope(r, i) = 0.0;
      }
    }
  Eigen::VectorXd resid = act * q.a;
  resid.array() += q.c - y.array();
  Eigen::VectorXd dout = (2.0 / n) * resid;
  g.a = act.transpose() * dout;
  g.c = dout.sum();
  Eigen::MatrixXd dz = slope.array().rowwise() * q.a.transpose().array();
  dz.array().colwise() *= dout.array();
  g.W = dz.transpose() * x;
  g.b = -dz.colwise().sum().transpose();
  return resid.squaredNorm() / n;
}

RepuNet to_net(const Params& q, int p) {
  RepuNet net;
  net.p = p;
  net.W = q.W;
  net.b = q.b;
  net.a = q.a;
  net.c = q.c;
  return net;
}

void adam_step(Params& q, const Params& g, Adam& st, double lr) {
  const double b1 = 0.9, b2 = 0.999, tiny = 1e-12;
  ++st.t;
  const double c1 = 1.0 - std::pow(b1, st.t), c2 = 1.0 - std::pow(b2, st.t);
  auto upd = [&](auto& param, const auto& grad, auto& m, auto& v) {
    m = b1 * m + (1.0 - b1) * grad;
    v = b2 * v + (1.0 - b2) * grad.cwiseProduct(grad);
    param.array() -= lr * (m.array() / c1) / ((v.array() / c2).sqrt() + tiny);
  };
  upd(q.W, g.W, st.m.W, st.v.W);
  upd(q.b, g.b, st.m.b, st.v.b);
  upd(q.a, g.a, st.m.a, st.v.a);
  st.m.c = b1 * st.m.c + (1.0 - b1) * g.c;
  st.v.c = b2 * st.v.c + (1.0 - b2) * g.c * g.c;
  q.c -= lr * (st.m.c / c1) / (std::sqrt(st.v.c / c2) + tiny);
}

// Per-unit AM-GM rescale of the parameters. Adam moments are carried along with the
// parameters they belong to (a gradient scales inversely to its parameter). Units whose
// cost share is negligible are left alone: with normalized steps their |a| and ||w|| sit at
// the step-size noise floor, and rescaling by that noisy ratio compounds into runaway offsets.
void rebalance(Params& q, Adam& st, int p) {
  const Eigen::Index k = q.W.rows();
  Eigen::VectorXd share(k);
  for (Eigen::Index i = 0; i < k; ++i) share[i] = std::pow(std::abs(q.a[i]), 1.0 / p) * q.W.row(i).norm();
  const double floor = 1e-3 * share.maxCoeff();
  for (Eigen::Index i = 0; i < k; ++i) {
    double len = q.W.row(i).norm(), mag = std::abs(q.a[i]);
    if (len == 0.0 || mag == 0.0 || share[i] < floor) continue;
    double r = std::sqrt(std::pow(mag, 1.0 / p) / len), rp = std::pow(r, p);
    q.W.row(i) *= r;
    q.b[i] *= r;
    q.a[i] /= rp;
    st.m.W.row(i) /= r;
    st.v.W.row(i) /= r * r;
    st.m.b[i] /= r;
    st.v.b[i] /= r * r;
    st.m.a[i] *= rp;
    st.v.a[i] *= rp * rp;
  }
}

}  // namespace

Eigen::MatrixXd linspace_inputs(int n, double lo, double hi) {
  Eigen::MatrixXd x(n, 1);
  for (int i = 0; i < n; ++i) x(i, 0) = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return x;
}

FitResult fit(const FitConfig& cfg) {
  require_odd_power(cfg.p);
  if (cfg.x.rows() == 0 || cfg.x.rows() != cfg.y.size()) throw Error("training data must be nonempty and consistent");
  if (cfg.width < 1) throw Error("width must be at least 1");
  if (!(cfg.lambda >= 0.0)) throw Error("lambda must be nonnegative");
  const int d = static_cast<int>(cfg.x.cols()), k = cfg.width, p = cfg.p;

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::VectorXd lo = cfg.x.colwise().minCoeff().transpose(), hi = cfg.x.colwise().maxCoeff().transpose();
  Params q;
  q.W.resize(k, d);
  q.b.resize(k);
  q.a.resize(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < d; ++j) q.W(i, j) = normal(rng) / std::sqrt(static_cast<double>(d));
    // Kink through a random point of the data box.
    Eigen::VectorXd anchor(d);
    for (int j = 0; j < d; ++j) anchor[j] = lo[j] + (hi[j] - lo[j]) * uniform(rng);
    q.b[i] = q.W.row(i).dot(anchor);
    q.a[i] = 0.1 * normal(rng);
  }
  q.c = 0.0;

  Adam st;
  st.m = Params{Eigen::MatrixXd::Zero(k, d), Eigen::VectorXd::Zero(k), Eigen::VectorXd::Zero(k), 0.0};
  st.v = st.m;

  FitResult res;
  Params g;
  auto checkpoint = [&](int step, double mse) {
    FitCheckpoint cp;
    cp.step = step;
    cp.mse = mse;
    cp.objective = mse + cfg.lambda * regularizer(q, p, cfg.epsilon);
    cp.cost = cost(to_net(q, p));
    res.trace.push_back(cp);
  };

  for (int step = 0; step < cfg.steps; ++step) {
    double mse = mse_and_grad(q, p, cfg.x, cfg.y, g);
    if (!std::isfinite(mse)) {
      checkpoint(step, mse);
      throw FitDivergence("training diverged", res.trace);
    }
    if (cfg.checkpoint_period > 0 && step % cfg.checkpoint_period == 0) checkpoint(step, mse);
    g.W += cfg.lambda * q.W;
    for (int i = 0; i < k; ++i)
      g.a[i] += cfg.lambda * (q.a[i] / p) * std::pow(q.a[i] * q.a[i] + cfg.epsilon * cfg.epsilon, 1.0 / p - 1.0);
    double frac = cfg.steps > 1 ? static_cast<double>(step) / (cfg.steps - 1) : 1.0;
    double lr = cfg.final_learning_rate +
                0.5 * (cfg.learning_rate - cfg.final_learning_rate) * (1.0 + std::cos(std::numbers::pi * frac));
    adam_step(q, g, st, lr);
    if (cfg.rebalance_period > 0 && (step + 1) % cfg.rebalance_period == 0) rebalance(q, st, p);
  }

  double mse = mse_and_grad(q, p, cfg.x, cfg.y, g);
  if (!std::isfinite(mse)) throw FitDivergence("training diverged", res.trace);
  checkpoint(cfg.steps, mse);
  res.final_mse = mse;
  res.net = canonicalize(to_net(q, p));
  double mass = 0.0;
  for (int i = 0; i < res.net.width(); ++i) {
    res.canonical_cost += std::pow(std::abs(res.net.a[i]), 1.0 / p);
    mass += std::abs(res.net.a[i]);
  }
  res.measure_cost = std::pow(mass, 1.0 / p);
  return res;
}

std::vector<SweepRow> lambda_sweep(const FitConfig& config, const std::vector<double>& lambdas) {
  std::vector<SweepRow> rows(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    FitConfig cfg = config;
    cfg.lambda = lambdas[i];
    FitResult r = fit(cfg);
    rows[i] = {lambdas[i], r.final_mse, r.canonical_cost, r.measure_cost};
  });
  return rows;
}

}  // namespace repu
