#include "repucost/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "repucost/error.hpp"

namespace repu {

double poly_derivative(const std::vector<double>& coef, double x, int k) {
  double s = 0.0;
  for (int n = static_cast<int>(coef.size()) - 1; n >= k; --n) {
    double falling = 1.0;
    for (int j = 0; j < k; ++j) falling *= (n - j);
    s = s * x + coef[n] * falling;
  }
  return s;
}

namespace {

int poly_degree(const std::vector<double>& c) {
  for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n)
    if (c[n] != 0.0) return n;
  return 0;
}

bool derivatives_agree(const std::vector<double>& left, const std::vector<double>& right, double t, int k,
                       double rel_tol) {
  double l = poly_derivative(left, t, k), r = poly_derivative(right, t, k);
  double scale = 1.0;
  for (const auto* c : {&left, &right}) {
    double mag = 0.0, tp = 1.0;
    for (std::size_t n = 0; n < c->size(); ++n) {
      mag += std::abs((*c)[n]) * tp;
      tp *= std::max(1.0, std::abs(t));
    }
    scale = std::max(scale, mag);
  }
  return std::abs(l - r) <= rel_tol * scale;
}

}  // namespace

PiecewisePoly1D::PiecewisePoly1D(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces,
                                 int continuity)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)), continuity_(continuity) {
  if (pieces_.size() != breaks_.size() + 1) throw Error("piecewise polynomial needs one more piece than breakpoints");
  for (std::size_t k = 0; k < breaks_.size(); ++k) {
    if (!std::isfinite(breaks_[k])) throw Error("breakpoints must be finite");
    if (k > 0 && !(breaks_[k] > breaks_[k - 1])) throw Error("breakpoints must be strictly increasing");
  }
  for (auto& c : pieces_) {
    if (c.empty()) c.push_back(0.0);
    for (double v : c)
      if (!std::isfinite(v)) throw Error("polynomial coefficients must be finite");
  }
  for (std::size_t k = 0; k < breaks_.size(); ++k)
    for (int order = 0; order <= continuity_; ++order)
      if (!derivatives_agree(pieces_[k], pieces_[k + 1], breaks_[k], order, 1e-9))
        throw Error("piecewise polynomial is not continuous to the declared order");
}

PiecewisePoly1D PiecewisePoly1D::polynomial(std::vector<double> coefficients) {
  return PiecewisePoly1D({}, {std::move(coefficients)});
}

int PiecewisePoly1D::piece_index(double x) const {
  return static_cast<int>(std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
}

double PiecewisePoly1D::operator()(double x) const { return poly_derivative(pieces_[piece_index(x)], x, 0); }

double PiecewisePoly1D::derivative_at(double x, int k) const {
  return poly_derivative(pieces_[piece_index(x)], x, k);
}

int PiecewisePoly1D::degree() const {
  int d = 0;
  for (const auto& c : pieces_) d = std::max(d, poly_degree(c));
  return d;
}

PiecewisePoly1D PiecewisePoly1D::derivative(int k) const {
  std::vector<std::vector<double>> out;
  for (const auto& c : pieces_) {
    std::vector<double> d;
    for (std::size_t n = k; n < c.size(); ++n) {
      double falling = 1.0;
      for (int j = 0; j < k; ++j) falling *= static_cast<double>(n - j);
      d.push_back(c[n] * falling);
    }
    if (d.empty()) d.push_back(0.0);
    out.push_back(std::move(d));
  }
  return PiecewisePoly1D(breaks_, std::move(out), continuity_ >= k ? continuity_ - k : -1);
}

PiecewisePoly1D PiecewisePoly1D::scaled(double factor) const {
  auto out = pieces_;
  for (auto& c : out)
    for (double& v : c) v *= factor;
  return PiecewisePoly1D(breaks_, std::move(out), continuity_);
}

PiecewisePoly1D PiecewisePoly1D::plus(const PiecewisePoly1D& other) const {
  std::set<double> all(breaks_.begin(), breaks_.end());
  all.insert(other.breaks_.begin(), other.breaks_.end());
  std::vector<double> merged(all.begin(), all.end());
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k <= merged.size(); ++k) {
    // A point strictly inside the k-th merged interval picks the source pieces.
    double probe;
    if (merged.empty())
      probe = 0.0;
    else if (k == 0)
      probe = merged.front() - 1.0;
    else if (k == merged.size())
      probe = merged.back() + 1.0;
    else
      probe = 0.5 * (merged[k - 1] + merged[k]);
    const auto& a = pieces_[piece_index(probe)];
    const auto& b = other.pieces_[other.piece_index(probe)];
    std::vector<double> c(std::max(a.size(), b.size()), 0.0);
    for (std::size_t n = 0; n < a.size(); ++n) c[n] += a[n];
    for (std::size_t n = 0; n < b.size(); ++n) c[n] += b[n];
    out.push_back(std::move(c));
  }
  return PiecewisePoly1D(std::move(merged), std::move(out), std::min(continuity_, other.continuity_));
}

int PiecewisePoly1D::measured_continuity(double rel_tol) const {
  int deg = degree();
  for (int k = 0; k <= deg; ++k)
    for (std::size_t j = 0; j < breaks_.size(); ++j)
      if (!derivatives_agree(pieces_[j], pieces_[j + 1], breaks_[j], k, rel_tol)) return k - 1;
  return deg;
}

}  // namespace repu
