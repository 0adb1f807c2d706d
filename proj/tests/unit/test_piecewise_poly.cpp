#include <doctest.h>

#include <cmath>
#include <random>

#include "repucost/error.hpp"
#include "repucost/piecewise_poly.hpp"
#include "repucost/univariate_cost.hpp"

using namespace repu;

TEST_CASE("evaluation picks the right piece") {
  PiecewisePoly1D f({-1.0, 2.0}, {{1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}});
  CHECK(f(-3.0) == 1.0);
  CHECK(f(0.5) == 0.5);
  CHECK(f(3.0) == 9.0);
  CHECK(f.piece_index(-1.0) == 1);
  CHECK(f.piece_index(2.0) == 2);
  CHECK(f.degree() == 2);
  CHECK(f.derivative_at(3.0, 1) == 6.0);
  CHECK(f.derivative_at(3.0, 2) == 2.0);
}

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(PiecewisePoly1D({1.0, 1.0}, {{0.0}, {0.0}, {0.0}}), Error);
  CHECK_THROWS_AS(PiecewisePoly1D({1.0}, {{0.0}}), Error);
  // [x]_+ is continuous but not C^1.
  CHECK_NOTHROW(PiecewisePoly1D({0.0}, {{0.0}, {0.0, 1.0}}, 0));
  CHECK_THROWS_AS(PiecewisePoly1D({0.0}, {{0.0}, {0.0, 1.0}}, 1), Error);
  CHECK_THROWS_AS(PiecewisePoly1D({0.0}, {{1.0}, {0.0, 1.0}}, 0), Error);
}

TEST_CASE("derivatives, scaling and sums") {
  PiecewisePoly1D f({0.0}, {{0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, 0.0, 1.0}});  // |x|^3
  PiecewisePoly1D d3 = f.derivative(3);
  CHECK(d3(-2.0) == -6.0);
  CHECK(d3(2.0) == 6.0);
  CHECK(f.measured_continuity() == 2);
  PiecewisePoly1D g = f.scaled(2.0).plus(PiecewisePoly1D({1.0}, {{1.0}, {0.0, 1.0}}));
  CHECK(g.breakpoints().size() == 2);
  CHECK(g(-1.0) == doctest::Approx(2.0 + 1.0));
  CHECK(g(2.0) == doctest::Approx(16.0 + 2.0));
  CHECK(poly_derivative({1.0, 2.0, 3.0}, 2.0, 1) == 14.0);
}

TEST_CASE("piecewise form of a one-input net matches the net") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int p : {1, 3, 5}) {
    RepuNet net;
    net.p = p;
    net.W.resize(6, 1);
    net.b.resize(6);
    net.a.resize(6);
    for (int i = 0; i < 6; ++i) {
      net.W(i, 0) = normal(rng);
      net.b[i] = normal(rng);
      net.a[i] = normal(rng);
    }
    net.c = normal(rng);
    PiecewisePoly1D f = piecewise_from_net(net);
    CHECK(f.measured_continuity(1e-8) >= p - 1);
    for (int s = 0; s < 50; ++s) {
      double x = 4.0 * normal(rng);
      double g = eval(net, Eigen::VectorXd::Constant(1, x));
      CHECK(f(x) == doctest::Approx(g).epsilon(1e-10));
    }
  }
}

TEST_CASE("least-squares adapter recovers a spline from samples") {
  // f = x^3 - 2 [x - 1]_+^3 + 0.5 [x + 1]_+^3, C^2 with breakpoints at -1 and 1.
  auto f = [](double x) {
    return x * x * x - 2.0 * std::pow(std::max(x - 1.0, 0.0), 3) + 0.5 * std::pow(std::max(x + 1.0, 0.0), 3);
  };
  std::vector<double> xs, ys;
  for (int i = 0; i <= 120; ++i) {
    double x = -3.0 + 0.05 * i;
    xs.push_back(x);
    ys.push_back(f(x));
  }
  PiecewisePoly1D fit = fit_piecewise_poly(xs, ys, {-1.0, 1.0}, 3);
  for (double x : {-2.7, -1.0, 0.3, 1.0, 2.9}) CHECK(fit(x) == doctest::Approx(f(x)).epsilon(1e-10));
  CostReport r = cost_1d(fit, 3);
  // Jumps of f''' are 6 * 0.5 and 6 * (-2); boundary values 6 and 6 - 12 + 3.
  CHECK(r.integral_term == doctest::Approx(2.5));
  CHECK(r.boundary_term == doctest::Approx(0.5));
}
