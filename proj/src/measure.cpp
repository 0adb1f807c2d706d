#include "repucost/measure.hpp"

#include <cmath>
#include <map>

#include "repucost/error.hpp"

namespace repu {

void require_odd_power(int p) {
  if (p < 1 || p % 2 == 0) throw Error("power p must be a positive odd integer");
}

WeightFn::WeightFn(int power) : p(power) { require_odd_power(power); }

double WeightFn::operator()(double b) const {
  if (p == 1) return 2.0;
  return 1.0 + std::pow(std::abs(b), p - 1);
}

AtomicMeasure::AtomicMeasure(int dim, std::vector<Atom> atoms) : dim_(dim) {
  if (dim < 1) throw Error("dimension must be positive");
  atoms_.reserve(atoms.size());
  for (auto& a : atoms) {
    if (a.w.size() != dim) throw Error("atom direction has wrong dimension");
    if (std::abs(a.w.norm() - 1.0) > 1e-12) throw Error("atom direction is not a unit vector");
    if (!std::isfinite(a.b) || !std::isfinite(a.mass)) throw Error("atom offset or mass is not finite");
    if (a.mass == 0.0) continue;
    atoms_.push_back(std::move(a));
  }
}

AtomicMeasure AtomicMeasure::merged() const {
  std::map<std::vector<double>, std::size_t> slot;
  std::vector<Atom> out;
  for (const auto& a : atoms_) {
    std::vector<double> key(a.w.data(), a.w.data() + a.w.size());
    key.push_back(a.b);
    for (double& v : key) v += 0.0;  // -0.0 and 0.0 share a slot
    auto [it, inserted] = slot.emplace(key, out.size());
    if (inserted)
      out.push_back(a);
    else
      out[it->second].mass += a.mass;
  }
  return AtomicMeasure(dim_, std::move(out));
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
  std::vector<Atom> out = atoms_;
  for (auto& a : out) a.mass *= factor;
  return AtomicMeasure(dim_, std::move(out));
}

AtomicMeasure AtomicMeasure::plus(const AtomicMeasure& other) const {
  if (other.dim_ != dim_) throw Error("measure dimension mismatch");
  std::vector<Atom> out = atoms_;
  out.insert(out.end(), other.atoms_.begin(), other.atoms_.end());
  return AtomicMeasure(dim_, std::move(out));
}

GridMeasure::GridMeasure(SphereQuadrature dirs, OffsetGrid grid, Eigen::MatrixXd values)
    : directions(std::move(dirs)), offsets(grid), density(std::move(values)) {
  directions.validate();
  if (density.rows() != directions.size() || density.cols() != offsets.count)
    throw Error("grid density shape does not match its grid");
  if (!density.allFinite()) throw Error("grid density is not finite");
}

double tv_norm(const AtomicMeasure& mu) {
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += std::abs(a.mass);
  return s;
}

double weighted_tv_norm(const AtomicMeasure& mu, const std::function<double(double)>& omega) {
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += omega(a.b) * std::abs(a.mass);
  return s;
}

double weighted_tv_norm(const GridMeasure& mu, const std::function<double(double)>& omega) {
  Eigen::VectorXd offset_weight(mu.offsets.count);
  for (int j = 0; j < mu.offsets.count; ++j)
    offset_weight[j] = mu.offsets.trapezoid_weight(j) * omega(mu.offsets.node(j));
  return mu.directions.weights.dot(mu.density.cwiseAbs() * offset_weight);
}

double tv_norm(const GridMeasure& mu) {
  return weighted_tv_norm(mu, [](double) { return 1.0; });
}

double tv_norm(const Measure& mu) {
  return std::visit([](const auto& m) { return tv_norm(m); }, mu);
}

double weighted_tv_norm(const Measure& mu, const std::function<double(double)>& omega) {
  return std::visit([&](const auto& m) { return weighted_tv_norm(m, omega); }, mu);
}

EvenOddParts<AtomicMeasure> even_odd_decompose(const AtomicMeasure& mu) {
  std::vector<Atom> even, odd;
  even.reserve(2 * mu.size());
  odd.reserve(2 * mu.size());
  for (const auto& a : mu.atoms()) {
    Atom mirrored{-a.w, -a.b, 0.0};
    even.push_back({a.w, a.b, 0.5 * a.mass});
    even.push_back({mirrored.w, mirrored.b, 0.5 * a.mass});
    odd.push_back({a.w, a.b, 0.5 * a.mass});
    odd.push_back({mirrored.w, mirrored.b, -0.5 * a.mass});
  }
  return {AtomicMeasure(mu.dim(), std::move(even)).merged(),
          AtomicMeasure(mu.dim(), std::move(odd)).merged()};
}

EvenOddParts<GridMeasure> even_odd_decompose(const GridMeasure& mu) {
  if (!mu.directions.reflection_closed()) throw Error("grid not symmetric");
  const int n = mu.directions.size(), m = mu.offsets.count;
  Eigen::MatrixXd even(n, m), odd(n, m);
  for (int i = 0; i < n; ++i) {
    int ia = mu.directions.antipode[i];
    for (int j = 0; j < m; ++j) {
      double here = mu.density(i, j), there = mu.density(ia, mu.offsets.mirror(j));
      even(i, j) = 0.5 * (here + there);
      odd(i, j) = 0.5 * (here - there);
    }
  }
  return {GridMeasure(mu.directions, mu.offsets, std::move(even)),
          GridMeasure(mu.directions, mu.offsets, std::move(odd))};
}

int measure_dim(const Measure& mu) {
  return std::visit([](const auto& m) { return m.dim(); }, mu);
}

}  // namespace repu
