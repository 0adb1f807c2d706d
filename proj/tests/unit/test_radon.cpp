#include <doctest.h>

#include <cmath>
#include <limits>

#include "repucost/error.hpp"
#include "repucost/field.hpp"
#include "repucost/radon.hpp"

using namespace repu;

namespace {

double inversion_error(const ScalarField& f, int n_dirs, double h) {
  RadonImage img = radon(f, fibonacci_sphere(n_dirs), OffsetGrid(8.0, h), PlaneRule{0.0, 0.25});
  Eigen::MatrixXd xs(5, 3);
  xs << 0, 0, 0, 0.5, 0, 0, 0, -0.7, 0.3, 1, 1, 0, 0.2, 0.4, -1.2;
  Eigen::VectorXd rec = invert_radon(img, xs);
  double worst = 0.0;
  for (int i = 0; i < xs.rows(); ++i) worst = std::max(worst, std::abs(rec[i] - f(xs.row(i).transpose())));
  return worst;
}

}  // namespace

TEST_CASE("inversion constants") {
  CHECK(inversion_constant(1) == doctest::Approx(0.5));
  CHECK(inversion_constant(3) == doctest::Approx(1.0 / (8.0 * M_PI * M_PI)));
  CHECK_THROWS_AS(inversion_constant(2), Error);
}

TEST_CASE("hyperplane integrals of the standard Gaussian") {
  SUBCASE("d = 3") {
    ScalarField g = standard_gaussian_field(3);
    RadonImage img = radon(g, fibonacci_sphere(20), OffsetGrid(8.0, 0.1), PlaneRule{0.0, 0.25});
    double worst = 0.0;
    for (int i = 0; i < img.directions.size(); ++i)
      for (int j = 0; j < img.offsets.count; ++j) {
        double b = img.offsets.node(j);
        worst = std::max(worst, std::abs(img.values(i, j) - 2.0 * M_PI * std::exp(-0.5 * b * b)));
      }
    CHECK(worst <= 1e-10);
    CHECK(img.even);
    CHECK(img.evenness_defect() <= 1e-12);
  }
  SUBCASE("d = 1 samples the function") {
    ScalarField g = standard_gaussian_field(1);
    RadonImage img = radon(g, line_directions(), OffsetGrid(4.0, 0.5));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < img.offsets.count; ++j) {
        double x = img.directions.nodes(i, 0) * img.offsets.node(j);
        CHECK(img.values(i, j) == std::exp(-0.5 * x * x));
      }
  }
}

TEST_CASE("single-direction planes") {
  ScalarField g = gaussian_mixture_field(3, {GaussianComponent{1.0, Eigen::Vector3d(1.0, 0.0, 0.0), 1.0, false}});
  Eigen::Vector3d w(1.0, 0.0, 0.0);
  Eigen::VectorXd line = radon_line(g, w, OffsetGrid(8.0, 0.25), PlaneRule{0.0, 0.25});
  OffsetGrid grid(8.0, 0.25);
  for (int j = 0; j < grid.count; ++j) {
    double b = grid.node(j) - 1.0;
    CHECK(line[j] == doctest::Approx(2.0 * M_PI * std::exp(-0.5 * b * b)).epsilon(1e-9));
  }
}

TEST_CASE("offset interpolation") {
  OffsetGrid g(2.0, 0.25);
  std::vector<double> row(g.count);
  for (int j = 0; j < g.count; ++j) row[j] = std::pow(g.node(j), 3) - g.node(j);
  for (double t : {-1.9, -0.33, 0.0, 0.61, 1.99})
    CHECK(interpolate_offset(g, row.data(), 1, t) == doctest::Approx(t * t * t - t).epsilon(1e-12));
  CHECK(interpolate_offset(g, row.data(), 1, 2.0) == doctest::Approx(6.0));
  CHECK_THROWS_WITH_AS(interpolate_offset(g, row.data(), 1, 2.5), doctest::Contains("offset grid too small"), Error);
}

TEST_CASE("dual transform of an image constant in b") {
  SphereQuadrature dirs = fibonacci_sphere(40);
  RadonImage one = make_image(dirs, OffsetGrid(4.0, 0.5), [](const auto&, double) { return 1.0; });
  Eigen::MatrixXd xs(2, 3);
  xs << 0, 0, 0, 1, -1, 0.5;
  Eigen::VectorXd v = dual_radon_rows(one, xs);
  CHECK(v[0] == doctest::Approx(4.0 * M_PI));
  CHECK(v[1] == doctest::Approx(4.0 * M_PI));
  CHECK(dual_radon(one, xs.row(1).transpose()) == doctest::Approx(4.0 * M_PI));
}

TEST_CASE("inversion recovers a Gaussian mixture") {
  ScalarField f = gaussian_mixture_field(3, {GaussianComponent{1.0, Eigen::Vector3d(0.3, 0.0, 0.0), 0.9, false},
                                             GaussianComponent{-0.5, Eigen::Vector3d(0.0, 0.5, 0.2), 1.2, false}});
  double coarse = inversion_error(f, 100, 0.1);
  double fine = inversion_error(f, 400, 0.05);
  CHECK(coarse <= 0.1);
  // Refining directions and offsets together shrinks the error.
  CHECK(fine <= 0.5 * coarse);
}

TEST_CASE("inversion input checks") {
  RadonImage odd = make_image(fibonacci_sphere(20), OffsetGrid(4.0, 0.5),
                              [](const Eigen::Ref<const Eigen::RowVectorXd>& w, double b) { return w[0] * std::exp(-b * b) + b; });
  Eigen::MatrixXd xs = Eigen::MatrixXd::Zero(1, 3);
  CHECK_THROWS_WITH_AS(invert_radon(odd, xs), doctest::Contains("not even"), Error);
}

TEST_CASE("fields with slow decay are rejected") {
  ScalarField slow = standard_gaussian_field(3);
  slow.decay_rate = 2.0;
  CHECK_THROWS_WITH_AS(radon(slow, fibonacci_sphere(20), OffsetGrid(4.0, 0.5)),
                       doctest::Contains("field not integrable on hyperplanes"), Error);
  ScalarField bad = standard_gaussian_field(3);
  bad.value = [](const double*) { return std::numeric_limits<double>::infinity(); };
  CHECK_THROWS_WITH_AS(radon(bad, fibonacci_sphere(20), OffsetGrid(4.0, 0.5)),
                       doctest::Contains("field not integrable on hyperplanes"), Error);
}

TEST_CASE("Fourier slice and intertwining at small scale") {
  ScalarField f = gaussian_mixture_field(3, {GaussianComponent{1.0, Eigen::Vector3d(0.5, -0.2, 0.1), 1.0, false},
                                             GaussianComponent{0.3, Eigen::Vector3d(0.0, 0.0, 0.0), 0.8, true}});
  Eigen::Vector3d w = Eigen::Vector3d(1.0, 2.0, 3.0).normalized();
  std::vector<double> taus{0.0, 0.5, 1.0, 2.0};
  SliceReport s = fourier_slice_check(f, w, taus, OffsetGrid(8.0, 0.05), PlaneRule{0.0, 0.25},
                                      CubeGrid{3, -8.0, 8.0, 41});
  CHECK(s.max_rel_error <= 1e-8);

  IntertwiningReport r = intertwining_check(f, 2, fibonacci_sphere(10), OffsetGrid(8.0, 0.02), PlaneRule{0.0, 0.25});
  CHECK(r.max_rel_error <= 1e-6);
  CHECK_THROWS_AS(intertwining_check(f, 3, fibonacci_sphere(10), OffsetGrid(8.0, 0.02)), Error);
}
