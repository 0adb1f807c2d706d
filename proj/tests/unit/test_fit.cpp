#include <doctest.h>

#include <cmath>
#include <limits>

#include "repucost/fit.hpp"

using namespace repu;

namespace {

FitConfig relu_config(int steps) {
  FitConfig cfg;
  cfg.p = 1;
  cfg.width = 8;
  cfg.lambda = 1e-4;
  cfg.x = linspace_inputs(200, -3.0, 3.0);
  cfg.y = cfg.x.col(0).cwiseMax(0.0);
  cfg.steps = steps;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("input grid") {
  Eigen::MatrixXd x = linspace_inputs(5, -1.0, 1.0);
  CHECK(x.rows() == 5);
  CHECK(x.cols() == 1);
  CHECK(x(0, 0) == -1.0);
  CHECK(x(2, 0) == 0.0);
  CHECK(x(4, 0) == 1.0);
}

TEST_CASE("zero target drives the cost to zero") {
  FitConfig cfg = relu_config(4000);
  cfg.y.setZero();
  cfg.lambda = 1e-2;
  FitResult r = fit(cfg);
  CHECK(r.final_mse <= 1e-6);
  CHECK(r.canonical_cost <= 1e-3);
}

TEST_CASE("ReLU target is fitted with near-unit cost") {
  FitResult r = fit(relu_config(20000));
  CHECK(r.final_mse <= 1e-4);
  CHECK(r.canonical_cost >= 0.95);
  CHECK(r.canonical_cost <= 1.10);
  CHECK(has_unit_rows(r.net));
  CHECK(!r.trace.empty());
  CHECK(r.trace.back().step == 20000);
}

TEST_CASE("training is deterministic for a fixed seed") {
  FitResult a = fit(relu_config(500));
  FitResult b = fit(relu_config(500));
  CHECK(a.final_mse == b.final_mse);
  CHECK(a.net.W == b.net.W);
  CHECK(a.net.a == b.net.a);
  FitConfig other = relu_config(500);
  other.seed = 8;
  CHECK(fit(other).final_mse != a.final_mse);
}

TEST_CASE("lambda sweep") {
  CHECK(lambda_sweep(relu_config(100), {}).empty());
  std::vector<SweepRow> rows = lambda_sweep(relu_config(300), {1e-3, 1e-4});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lambda == 1e-3);
  CHECK(rows[1].lambda == 1e-4);
  FitConfig single = relu_config(300);
  single.lambda = 1e-4;
  CHECK(rows[1].mse == fit(single).final_mse);
}

TEST_CASE("invalid configurations") {
  FitConfig cfg = relu_config(10);
  cfg.width = 0;
  CHECK_THROWS_AS(fit(cfg), Error);
  cfg = relu_config(10);
  cfg.lambda = -1.0;
  CHECK_THROWS_AS(fit(cfg), Error);
  cfg = relu_config(10);
  cfg.y.resize(3);
  CHECK_THROWS_AS(fit(cfg), Error);
}

TEST_CASE("non-finite loss raises a divergence error with the trace") {
  FitConfig cfg = relu_config(10);
  cfg.y[0] = std::numeric_limits<double>::infinity();
  try {
    fit(cfg);
    FAIL("expected divergence");
  } catch (const FitDivergence& e) {
    CHECK(std::string(e.what()) == "training diverged");
    CHECK(!e.trace().empty());
  }
}
