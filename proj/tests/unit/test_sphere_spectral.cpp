#include <doctest.h>

#include <cmath>

#include "repucost/error.hpp"
#include "repucost/spectral.hpp"
#include "repucost/sphere.hpp"

using namespace repu;

TEST_CASE("sphere areas") {
  CHECK(sphere_area(1) == doctest::Approx(2.0));
  CHECK(sphere_area(2) == doctest::Approx(2.0 * M_PI));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI));
  CHECK(sphere_area(5) == doctest::Approx(8.0 * M_PI * M_PI / 3.0));
  CHECK_THROWS_AS(sphere_area(0), Error);
}

TEST_CASE("Fibonacci lattice is a valid, reflection-closed rule") {
  for (int n : {2, 20, 1000}) {
    SphereQuadrature q = fibonacci_sphere(n);
    CHECK(q.size() == n);
    CHECK_NOTHROW(q.validate());
    CHECK(q.reflection_closed());
    CHECK(q.weights.sum() == doctest::Approx(4.0 * M_PI));
    for (int i = 0; i < n; ++i) {
      REQUIRE(q.antipode[i] >= 0);
      CHECK((q.nodes.row(i) + q.nodes.row(q.antipode[i])).norm() == 0.0);
      CHECK(q.antipode[q.antipode[i]] == i);
    }
  }
  CHECK_THROWS_WITH_AS(fibonacci_sphere(11), doctest::Contains("even"), Error);
  CHECK_THROWS_AS(fibonacci_sphere(0), Error);
}

TEST_CASE("Fibonacci rule integrates low-degree polynomials") {
  SphereQuadrature q = fibonacci_sphere(2000);
  double x2 = 0.0, z2 = 0.0, z4 = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    x2 += q.weights[i] * std::pow(q.nodes(i, 0), 2);
    z2 += q.weights[i] * std::pow(q.nodes(i, 2), 2);
    z4 += q.weights[i] * std::pow(q.nodes(i, 2), 4);
  }
  CHECK(x2 == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-3));
  CHECK(z2 == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-3));
  CHECK(z4 == doctest::Approx(4.0 * M_PI / 5.0).epsilon(1e-3));
}

TEST_CASE("line directions and explicit rules") {
  SphereQuadrature l = line_directions();
  CHECK(l.dim == 1);
  CHECK(l.size() == 2);
  CHECK(l.reflection_closed());
  CHECK_NOTHROW(l.validate());

  Eigen::MatrixXd nodes(3, 2);
  nodes << 1, 0, 0, 1, -1, 0;
  Eigen::VectorXd w = Eigen::VectorXd::Constant(3, 2.0 * M_PI / 3.0);
  SphereQuadrature q = make_sphere_quadrature(nodes, w);
  CHECK(q.antipode[0] == 2);
  CHECK(q.antipode[1] == -1);
  CHECK_FALSE(q.reflection_closed());

  nodes(1, 1) = 2.0;
  CHECK_THROWS_WITH_AS(make_sphere_quadrature(nodes, w), doctest::Contains("unit vector"), Error);
  nodes(1, 1) = 1.0;
  CHECK_THROWS_WITH_AS(make_sphere_quadrature(nodes, Eigen::VectorXd::Ones(3)),
                       doctest::Contains("sphere area"), Error);
}

TEST_CASE("offset grids") {
  OffsetGrid g(2.0, 0.5);
  CHECK(g.count == 9);
  CHECK(g.node(0) == -2.0);
  CHECK(g.node(8) == 2.0);
  CHECK(g.trapezoid_weight(0) == 0.25);
  CHECK(g.trapezoid_weight(4) == 0.5);
  CHECK(g.mirror(1) == 7);
  CHECK_THROWS_WITH_AS(OffsetGrid(2.0, 0.3), doctest::Contains("multiple of the spacing"), Error);
  CHECK_THROWS_AS(OffsetGrid(0.0, 0.1), Error);
  CHECK_THROWS_AS(OffsetGrid(1.0, -0.1), Error);
}

TEST_CASE("cube grids") {
  CubeGrid c{3, -1.0, 1.0, 3};
  CHECK(c.total() == 27);
  Eigen::MatrixXd pts = c.points();
  CHECK(pts.rows() == 27);
  CHECK(pts(0, 0) == -1.0);
  CHECK(pts(1, 2) == 0.0);
  CHECK(pts(1, 1) == -1.0);
  CHECK(pts(26, 0) == 1.0);
}

TEST_CASE("Tukey window") {
  Eigen::VectorXd flat = tukey_window(16, 0.0);
  CHECK(flat.minCoeff() == 1.0);
  Eigen::VectorXd w = tukey_window(101, 0.2);
  CHECK(w[0] == doctest::Approx(0.0));
  CHECK(w[100] == doctest::Approx(0.0));
  CHECK(w[50] == 1.0);
  for (int i = 0; i < 101; ++i) {
    CHECK(w[i] == doctest::Approx(w[100 - i]));
    CHECK(w[i] >= 0.0);
    CHECK(w[i] <= 1.0);
  }
}

TEST_CASE("spectral derivatives of a Gaussian") {
  const double h = 0.05;
  OffsetGrid g(10.0, h);
  Eigen::VectorXd s(g.count), d1(g.count), d2(g.count), d4(g.count);
  for (int j = 0; j < g.count; ++j) {
    double b = g.node(j), e = std::exp(-0.5 * b * b);
    s[j] = e;
    d1[j] = -b * e;
    d2[j] = (b * b - 1.0) * e;
    d4[j] = (b * b * b * b - 6.0 * b * b + 3.0) * e;
  }
  CHECK((fourier_derivative(s, h, 0) - s).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((fourier_derivative(s, h, 1) - d1).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK((fourier_derivative(s, h, 2) - d2).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK((fourier_derivative(s, h, 4) - d4).cwiseAbs().maxCoeff() <= 1e-8);

  Eigen::MatrixXd rows(2, g.count);
  rows.row(0) = s.transpose();
  rows.row(1) = 2.0 * s.transpose();
  Eigen::MatrixXd r2 = fourier_derivative_rows(rows, h, 2);
  CHECK((r2.row(1) - 2.0 * r2.row(0)).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(fourier_derivative(s, h, -1), Error);
  CHECK_THROWS_AS(fourier_derivative(Eigen::VectorXd::Ones(3), h, 1), Error);
}
