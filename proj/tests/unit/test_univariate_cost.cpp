#include <doctest.h>

#include <cmath>
#include <random>

#include "repucost/error.hpp"
#include "repucost/infinite_net.hpp"
#include "repucost/univariate_cost.hpp"

using namespace repu;

namespace {

double fact(int n) { return n <= 1 ? 1.0 : n * fact(n - 1); }

std::vector<double> monomial(int p, double coef = 1.0) {
  std::vector<double> c(p + 1, 0.0);
  c[p] = coef;
  return c;
}

PiecewisePoly1D relu_power(int p) { return PiecewisePoly1D({0.0}, {monomial(p, 0.0), monomial(p)}); }
PiecewisePoly1D abs_power(int p) { return PiecewisePoly1D({0.0}, {monomial(p, -1.0), monomial(p)}); }

RepuNet random_unit_net(std::mt19937_64& rng, int p, int k, bool one_sign) {
  std::uniform_real_distribution<double> off(-3.0, 3.0), mag(0.2, 2.0), coin(0.0, 1.0);
  RepuNet net;
  net.p = p;
  net.W.resize(k, 1);
  net.b.resize(k);
  net.a.resize(k);
  for (int i = 0; i < k; ++i) {
    net.W(i, 0) = coin(rng) < 0.5 ? 1.0 : -1.0;
    net.b[i] = off(rng);
    net.a[i] = (one_sign || coin(rng) < 0.5 ? 1.0 : -1.0) * mag(rng);
  }
  net.c = off(rng);
  return net;
}

double sup_error_on(const OptimalMeasure& m, const PiecewisePoly1D& f, int p, double radius) {
  InfiniteNet h;
  h.mu = m.measure;
  h.c = m.c;
  h.p = p;
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    double x = -radius + 2.0 * radius * i / 400.0;
    worst = std::max(worst, std::abs(eval_H(h, Eigen::VectorXd::Constant(1, x)) - f(x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("distributional derivatives of the canonical functions") {
  for (int p : {1, 3, 5}) {
    const double pf = fact(p);
    DerivativeData r = distributional_derivatives(relu_power(p), p);
    REQUIRE(r.next.atoms.size() == 1);
    CHECK(r.next.atoms[0].location == 0.0);
    CHECK(r.next.atoms[0].weight == doctest::Approx(pf));
    CHECK(r.limit_minus == 0.0);
    CHECK(r.limit_plus == doctest::Approx(pf));

    DerivativeData m = distributional_derivatives(PiecewisePoly1D::polynomial(monomial(p)), p);
    CHECK(m.next.atoms.empty());
    CHECK(m.limit_minus == doctest::Approx(pf));
    CHECK(m.limit_plus == doctest::Approx(pf));

    DerivativeData a = distributional_derivatives(abs_power(p), p);
    REQUIRE(a.next.atoms.size() == 1);
    CHECK(a.next.atoms[0].weight == doctest::Approx(2.0 * pf));
    CHECK(a.limit_minus == doctest::Approx(-pf));
    CHECK(a.limit_plus == doctest::Approx(pf));
    CHECK(a.pth(-1.0) == doctest::Approx(-pf));
  }
}

TEST_CASE("functions outside the RePU class are rejected") {
  CHECK_THROWS_WITH_AS(distributional_derivatives(PiecewisePoly1D::polynomial({0, 0, 0, 0, 1}), 3),
                       doctest::Contains("not RePU-representable at this p"), Error);
  // [x]_+ is not C^2, so it is not a cubic RePU function.
  CHECK_THROWS_WITH_AS(distributional_derivatives(PiecewisePoly1D({0.0}, {{0.0}, {0.0, 1.0}}), 3),
                       doctest::Contains("not RePU-representable"), Error);
  CHECK_THROWS_AS(cost_1d(relu_power(2), 2), Error);
}

TEST_CASE("closed-form cost of the canonical functions") {
  for (int p : {1, 3}) {
    CostReport r = cost_1d(relu_power(p), p);
    CHECK(r.integral_term == doctest::Approx(1.0));
    CHECK(r.boundary_term == doctest::Approx(1.0));
    CHECK(r.cost == doctest::Approx(1.0));
    CHECK(r.active_case == LambdaCase::Zero);

    CostReport m = cost_1d(PiecewisePoly1D::polynomial(monomial(p)), p);
    CHECK(m.integral_term == 0.0);
    CHECK(m.boundary_term == doctest::Approx(2.0));
    CHECK(m.cost == doctest::Approx(std::pow(2.0, 1.0 / p)));
    CHECK(m.active_case == LambdaCase::Negative);

    CostReport neg = cost_1d(PiecewisePoly1D::polynomial(monomial(p, -1.0)), p);
    CHECK(neg.active_case == LambdaCase::Positive);

    CostReport a = cost_1d(abs_power(p), p);
    CHECK(a.integral_term == doctest::Approx(2.0));
    CHECK(a.boundary_term == 0.0);
    CHECK(a.cost == doctest::Approx(std::pow(2.0, 1.0 / p)));
    CHECK(a.active_case == LambdaCase::Zero);
  }
}

TEST_CASE("cost is 1-homogeneous, shift-invariant and exact for one-sign nets") {
  std::mt19937_64 rng(3);
  for (int p : {1, 3}) {
    for (int t = 0; t < 10; ++t) {
      RepuNet net = random_unit_net(rng, p, 5, false);
      PiecewisePoly1D f = piecewise_from_net(net);
      CostReport base = cost_1d(f, p);
      CostReport scaled = cost_1d(f.scaled(2.5), p);
      CHECK(std::pow(scaled.cost, p) == doctest::Approx(2.5 * std::pow(base.cost, p)));
      CostReport shifted = cost_1d(f.plus(PiecewisePoly1D::polynomial({7.0})), p);
      CHECK(shifted.cost == doctest::Approx(base.cost));

      RepuNet pos = random_unit_net(rng, p, 4, true);
      CHECK(cost_1d(piecewise_from_net(pos), p).cost ==
            doctest::Approx(std::pow(pos.a.cwiseAbs().sum(), 1.0 / p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("moment right-hand sides match the derivative-at-zero formulas") {
  std::mt19937_64 rng(19);
  for (int p : {1, 3, 5}) {
    for (int t = 0; t < 5; ++t) {
      PiecewisePoly1D f = piecewise_from_net(random_unit_net(rng, p, 5, false));
      DerivativeData dd = distributional_derivatives(f, p);
      const double pf = fact(p);
      Eigen::VectorXd rhs = moment_targets(f, p);
      REQUIRE(rhs.size() == p);
      CHECK(rhs[0] == doctest::Approx((dd.limit_minus + dd.limit_plus) / pf));
      for (int k = 1; k < p; ++k) {
        const int e = p - k;
        double jump_sum = 0.0;
        for (const auto& a : dd.next.atoms) {
          double t0 = a.location;
          if (k % 2 == 0)
            jump_sum += a.weight * std::pow(std::abs(t0), e);
          else
            jump_sum += a.weight * (std::pow(std::max(-t0, 0.0), e) - std::pow(std::max(t0, 0.0), e));
        }
        double fk0 = f.derivative_at(0.0, k);
        double expected = k % 2 == 0 ? jump_sum / pf - 2.0 * fact(e) / pf * fk0 : 2.0 * fact(e) / pf * fk0 - jump_sum / pf;
        CHECK(rhs[e] == doctest::Approx(expected).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("optimal measures of the canonical functions") {
  for (int p : {1, 3}) {
    OptimalMeasure r = build_optimal_measure(relu_power(p), p, 8.0, 0.01);
    CHECK(r.achieved_norm == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sup_error_on(r, relu_power(p), p, 5.0) <= 1e-6);
    CHECK(r.lp_case == LambdaCase::Zero);

    PiecewisePoly1D mono = PiecewisePoly1D::polynomial(monomial(p));
    OptimalMeasure m = build_optimal_measure(mono, p, 8.0, 0.01);
    CHECK(m.achieved_norm == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(sup_error_on(m, mono, p, 5.0) <= 1e-6 * std::pow(5.0, p));
    CHECK(m.lp_case == LambdaCase::Negative);

    OptimalMeasure a = build_optimal_measure(abs_power(p), p, 8.0, 0.01);
    CHECK(a.achieved_norm == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(a.problem.solution.cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(a.lp_case == LambdaCase::Zero);
  }
  OptimalMeasure neg = build_optimal_measure(PiecewisePoly1D::polynomial(monomial(3, -1.0)), 3, 8.0, 0.01);
  CHECK(neg.lp_case == LambdaCase::Positive);
}

TEST_CASE("LP value equals the closed form and dominates both lower bounds") {
  std::mt19937_64 rng(101);
  for (int p : {1, 3}) {
    for (int t = 0; t < 5; ++t) {
      RepuNet net = random_unit_net(rng, p, 5, false);
      PiecewisePoly1D f = piecewise_from_net(net);
      TheoremCheck chk = verify_theorem_1d(f, p, 8.0, 0.01);
      CHECK(chk.passed);
      CHECK(chk.rel_error <= 1e-4);
      CHECK(chk.lp_value >= chk.closed_form.integral_term * (1.0 - 1e-9));
      CHECK(chk.lp_value >= chk.closed_form.boundary_term * (1.0 - 1e-9));
      OptimalMeasure m = build_optimal_measure(f, p, 8.0, 0.01);
      CHECK(m.problem.max_residual <= 1e-8);
      CHECK(std::abs(m.c - f(0.0)) <= 1e-12 * (1.0 + std::abs(f(0.0))));
    }
  }
}

TEST_CASE("reconstruction holds at two grid resolutions") {
  std::mt19937_64 rng(55);
  RepuNet net = random_unit_net(rng, 3, 5, false);
  PiecewisePoly1D f = piecewise_from_net(net);
  double scale = 0.0;
  for (int i = -50; i <= 50; ++i) scale = std::max(scale, std::abs(f(0.1 * i)));
  for (double h : {0.02, 0.01}) {
    OptimalMeasure m = build_optimal_measure(f, 3, 8.0, h);
    CHECK(sup_error_on(m, f, 3, 5.0) <= 1e-8 * (1.0 + scale));
  }
}

TEST_CASE("truncation too small for the moment constraints") {
  // Two nodes cannot carry three independent moments of x^3.
  CHECK_THROWS_WITH_AS(build_optimal_measure(PiecewisePoly1D::polynomial(monomial(3)), 3, 0.5, 1.0),
                       doctest::Contains("increase truncation B"), Error);
}
