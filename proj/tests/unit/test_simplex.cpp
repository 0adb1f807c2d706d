#include <doctest.h>

#include <random>

#include "repucost/simplex.hpp"

using namespace repu;

TEST_CASE("small textbook problem") {
  // min -x1 - 2 x2  s.t. x1 + x2 + s1 = 4, x1 + 3 x2 + s2 = 6
  Eigen::MatrixXd A(2, 4);
  A << 1, 1, 1, 0, 1, 3, 0, 1;
  Eigen::VectorXd rhs(2), c(4);
  rhs << 4, 6;
  c << -1, -2, 0, 0;
  LpResult r = solve_standard_lp(A, rhs, c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-5.0));
  CHECK(r.x[0] == doctest::Approx(3.0));
  CHECK(r.x[1] == doctest::Approx(1.0));
  // Strong duality.
  CHECK(rhs.dot(r.duals) == doctest::Approx(r.objective));
}

TEST_CASE("infeasible and unbounded problems are reported") {
  Eigen::MatrixXd A(1, 2);
  A << 1, 1;
  Eigen::VectorXd rhs(1), c(2);
  rhs << -1;
  c << 1, 1;
  CHECK(solve_standard_lp(A, rhs, c).status == LpStatus::Infeasible);
  Eigen::MatrixXd B(1, 2);
  B << 1, -1;
  rhs << 1;
  c << 0, -1;
  CHECK(solve_standard_lp(B, rhs, c).status == LpStatus::Unbounded);
}

TEST_CASE("redundant rows and negative right-hand sides") {
  Eigen::MatrixXd A(3, 3);
  A << 1, 1, 1, 2, 2, 2, -1, 0, 1;
  Eigen::VectorXd rhs(3), c(3);
  rhs << 1, 2, -0.5;
  c << 1, 2, 3;
  LpResult r = solve_standard_lp(A, rhs, c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK((A * r.x - rhs).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(r.objective == doctest::Approx(1.5));
}

TEST_CASE("random L1 fits: duality gap closes and the solve is deterministic") {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    const int m = 3, n = 30;
    Eigen::MatrixXd M(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = normal(rng);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = normal(rng);
    // min ||x||_1 s.t. M x = rhs, split x = u - v.
    Eigen::MatrixXd A(m, 2 * n);
    A << M, -M;
    Eigen::VectorXd c = Eigen::VectorXd::Ones(2 * n);
    LpResult r1 = solve_standard_lp(A, rhs, c), r2 = solve_standard_lp(A, rhs, c);
    REQUIRE(r1.status == LpStatus::Optimal);
    CHECK((A * r1.x - rhs).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(rhs.dot(r1.duals) == doctest::Approx(r1.objective).epsilon(1e-10));
    CHECK(((A.transpose() * r1.duals).array() <= c.array() + 1e-10).all());
    CHECK(r1.x == r2.x);
    CHECK(r1.iterations == r2.iterations);
    // A basic solution of the L1 problem has at most m nonzeros.
    int nz = 0;
    for (int j = 0; j < 2 * n; ++j) nz += r1.x[j] > 1e-12;
    CHECK(nz <= m);
  }
}
