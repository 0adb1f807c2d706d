#pragma once

#include <vector>

namespace repu {

// Piecewise polynomial on R. Piece k lives on (t_k, t_{k+1}) with t_0 = -inf and
// t_{m+1} = +inf; coefficients are in the monomial basis in x, lowest degree first.
class PiecewisePoly1D {
 public:
  PiecewisePoly1D() : pieces_{{0.0}} {}
  // Checks that value and derivatives up to `continuity` agree at every breakpoint
  // (relative tolerance 1e-9). continuity = -1 skips the check.
  PiecewisePoly1D(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces,
                  int continuity = -1);

  static PiecewisePoly1D polynomial(std::vector<double> coefficients);

  const std::vector<double>& breakpoints() const { return breaks_; }
  const std::vector<std::vector<double>>& pieces() const { return pieces_; }
  int continuity() const { return continuity_; }

  // Index of the piece containing x; breakpoints belong to the piece on their right.
  int piece_index(double x) const;
  double operator()(double x) const;
  // k-th derivative of the piece containing x (right limit at breakpoints).
  double derivative_at(double x, int k) const;
  int degree() const;
  PiecewisePoly1D derivative(int k = 1) const;
  PiecewisePoly1D scaled(double factor) const;
  PiecewisePoly1D plus(const PiecewisePoly1D& other) const;
  // Highest order k such that derivatives 0..k agree at all breakpoints (capped at the degree).
  int measured_continuity(double rel_tol = 1e-9) const;

 private:
  std::vector<double> breaks_;
  std::vector<std::vector<double>> pieces_;
  int continuity_ = -1;
};

// Evaluates the k-th derivative of a monomial-basis polynomial at x.
double poly_derivative(const std::vector<double>& coef, double x, int k);

}  // namespace repu
