#pragma once

#include <Eigen/Dense>
#include <functional>
#include <variant>
#include <vector>

#include "repucost/sphere.hpp"

namespace repu {

// psi(b) = 1 + |b|^(p-1), with |0|^0 = 1 so that psi == 2 for p = 1.
struct WeightFn {
  int p = 1;

  explicit WeightFn(int power);
  double operator()(double b) const;
  double inverse(double b) const { return 1.0 / (*this)(b); }
};

// Throws unless p is a positive odd integer.
void require_odd_power(int p);

struct Atom {
  Eigen::VectorXd w;
  double b = 0.0;
  double mass = 0.0;
};

// Finite signed combination of Dirac masses on S^{d-1} x R. Zero-mass atoms are dropped on
// construction; directions must be unit vectors to 1e-12.
class AtomicMeasure {
 public:
  explicit AtomicMeasure(int dim = 1) : dim_(dim) {}
  AtomicMeasure(int dim, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  // Sums masses of atoms with bitwise-equal (w, b); keeps first-occurrence order.
  AtomicMeasure merged() const;
  AtomicMeasure scaled(double factor) const;
  // Concatenation (no merging).
  AtomicMeasure plus(const AtomicMeasure& other) const;

 private:
  int dim_;
  std::vector<Atom> atoms_;
};

// Density sampled on (direction quadrature) x (uniform offset grid).
struct GridMeasure {
  SphereQuadrature directions;
  OffsetGrid offsets;
  Eigen::MatrixXd density;  // directions.size() x offsets.count

  GridMeasure() = default;
  GridMeasure(SphereQuadrature dirs, OffsetGrid grid, Eigen::MatrixXd values);
  int dim() const { return directions.dim; }
};

using Measure = std::variant<AtomicMeasure, GridMeasure>;

double tv_norm(const AtomicMeasure& mu);
double tv_norm(const GridMeasure& mu);
double tv_norm(const Measure& mu);

double weighted_tv_norm(const AtomicMeasure& mu, const std::function<double(double)>& omega);
double weighted_tv_norm(const GridMeasure& mu, const std::function<double(double)>& omega);
double weighted_tv_norm(const Measure& mu, const std::function<double(double)>& omega);

template <class M>
struct EvenOddParts {
  M even;
  M odd;
};

// Split under (w, b) -> (-w, -b). Atomic parts are returned merged.
EvenOddParts<AtomicMeasure> even_odd_decompose(const AtomicMeasure& mu);
// Requires a reflection-closed direction set; throws "grid not symmetric" otherwise.
EvenOddParts<GridMeasure> even_odd_decompose(const GridMeasure& mu);

int measure_dim(const Measure& mu);

}  // namespace repu
