#include "repucost/repu_net.hpp"

#include <cmath>

#include "repucost/error.hpp"

namespace repu {

void RepuNet::validate() const {
  require_odd_power(p);
  if (b.size() != W.rows() || a.size() != W.rows()) throw Error("net parameter sizes disagree with width");
  if (W.rows() > 0 && W.cols() < 1) throw Error("net input dimension must be positive");
  if (!W.allFinite() || !b.allFinite() || !a.allFinite() || !std::isfinite(c))
    throw Error("net parameters must be finite");
}

void MonomialNet::validate() const {
  base.validate();
  if (v.rows() != base.dim() || v.cols() != base.p) throw Error("monomial coefficients must be d x p");
}

double repu(double t, int p) {
  if (t <= 0.0) return 0.0;
  double r = t;
  for (int k = 1; k < p; ++k) r *= t;
  return r;
}

double eval(const RepuNet& net, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != net.dim()) throw Error("dimension mismatch");
  double s = net.c;
  for (int i = 0; i < net.width(); ++i) s += net.a[i] * repu(net.W.row(i).dot(x) - net.b[i], net.p);
  return s;
}

double eval(const MonomialNet& net, const Eigen::Ref<const Eigen::VectorXd>& x) {
  double s = eval(net.base, x);
  for (int k = 1; k <= net.base.p; ++k)
    for (int j = 0; j < x.size(); ++j) s += net.v(j, k - 1) * std::pow(x[j], k);
  return s;
}

Eigen::VectorXd eval_rows(const RepuNet& net, const Eigen::Ref<const Eigen::MatrixXd>& xs) {
  Eigen::VectorXd out(xs.rows());
  for (Eigen::Index r = 0; r < xs.rows(); ++r) out[r] = eval(net, xs.row(r).transpose());
  return out;
}

RepuNet canonicalize(const RepuNet& net) {
  net.validate();
  RepuNet out;
  out.p = net.p;
  out.c = net.c;
  int kept = 0;
  for (int i = 0; i < net.width(); ++i) kept += net.W.row(i).norm() > 0.0;
  out.W.resize(kept, net.dim());
  out.b.resize(kept);
  out.a.resize(kept);
  int r = 0;
  for (int i = 0; i < net.width(); ++i) {
    double len = net.W.row(i).norm();
    if (len == 0.0) {
      out.c += net.a[i] * repu(-net.b[i], net.p);
      continue;
    }
    if (len == 1.0) {
      out.W.row(r) = net.W.row(i);
      out.b[r] = net.b[i];
      out.a[r] = net.a[i];
    } else {
      out.W.row(r) = net.W.row(i) / len;
      out.b[r] = net.b[i] / len;
      out.a[r] = net.a[i] * std::pow(len, net.p);
    }
    ++r;
  }
  return out;
}

RepuNet balance(const RepuNet& net) {
  net.validate();
  RepuNet out = net;
  for (int i = 0; i < net.width(); ++i) {
    double len = net.W.row(i).norm();
    double mag = std::abs(net.a[i]);
    if (len == 0.0 || mag == 0.0) continue;
    double r = std::sqrt(std::pow(mag, 1.0 / net.p) / len);
    out.W.row(i) *= r;
    out.b[i] *= r;
    out.a[i] /= std::pow(r, net.p);
  }
  return out;
}

bool has_unit_rows(const RepuNet& net, double tol) {
  for (int i = 0; i < net.width(); ++i)
    if (std::abs(net.W.row(i).norm() - 1.0) > tol) return false;
  return true;
}

CostBreakdown cost(const RepuNet& net) {
  net.validate();
  CostBreakdown out;
  const double inv_p = 1.0 / net.p;
  out.frobenius_term = 0.5 * net.W.squaredNorm();
  for (int i = 0; i < net.width(); ++i) {
    double mag = std::abs(net.a[i]);
    out.outer_term += 0.5 * std::pow(mag, 2.0 * inv_p);
    out.balanced_cost += std::pow(mag, inv_p) * net.W.row(i).norm();
  }
  RepuNet canon = canonicalize(net);
  for (int i = 0; i < canon.width(); ++i) out.canonical_cost += std::pow(std::abs(canon.a[i]), inv_p);
  return out;
}

NetMeasure to_measure(const RepuNet& net) {
  net.validate();
  if (!has_unit_rows(net)) throw Error("canonicalize first");
  WeightFn psi(net.p);
  std::vector<Atom> atoms;
  atoms.reserve(net.width());
  for (int i = 0; i < net.width(); ++i)
    atoms.push_back({net.W.row(i).transpose(), net.b[i], net.a[i] * psi(net.b[i])});
  return {AtomicMeasure(net.dim(), std::move(atoms)), eval(net, Eigen::VectorXd::Zero(net.dim()))};
}

}  // namespace repu
