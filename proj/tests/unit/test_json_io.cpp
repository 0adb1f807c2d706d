#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "repucost/error.hpp"
#include "repucost/json_io.hpp"

using namespace repu;

TEST_CASE("dump17 keeps every bit of a double") {
  json j = {{"x", 0.1}, {"y", 1.0 / 3.0}, {"n", 3}, {"s", "text"}};
  std::string text = dump17(j, -1);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  json back = json::parse(text);
  CHECK(back.at("x").get<double>() == 0.1);
  CHECK(back.at("y").get<double>() == 1.0 / 3.0);
  CHECK(back.at("n").get<int>() == 3);
  CHECK(back.at("s").get<std::string>() == "text");
}

TEST_CASE("atomic measures round-trip") {
  AtomicMeasure mu(2, {{Eigen::Vector2d(0.6, 0.8), 0.1, 2.5}, {Eigen::Vector2d(-1.0, 0.0), -1.0 / 7.0, -0.3}});
  AtomicMeasure back = atomic_measure_from_json(json::parse(dump17(to_json(mu))));
  REQUIRE(back.size() == 2);
  CHECK(back.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.atoms()[i].w == mu.atoms()[i].w);
    CHECK(back.atoms()[i].b == mu.atoms()[i].b);
    CHECK(back.atoms()[i].mass == mu.atoms()[i].mass);
  }
}

TEST_CASE("grid measures and images round-trip") {
  SphereQuadrature dirs = fibonacci_sphere(6);
  OffsetGrid grid(1.0, 0.5);
  Eigen::MatrixXd dens = Eigen::MatrixXd::Random(6, grid.count);
  GridMeasure mu(dirs, grid, dens);
  GridMeasure back = grid_measure_from_json(json::parse(dump17(to_json(mu))));
  CHECK(back.density == dens);
  CHECK(back.directions.nodes == dirs.nodes);
  CHECK(back.offsets.count == grid.count);

  RadonImage img;
  img.directions = dirs;
  img.offsets = grid;
  img.values = dens;
  img.even = true;
  RadonImage ib = radon_image_from_json(json::parse(dump17(to_json(img))));
  CHECK(ib.values == dens);
  CHECK(ib.even);
  CHECK(ib.dim() == 3);

  json wrong = to_json(img);
  wrong["values"] = json::array({json::array({1.0, 2.0})});
  CHECK_THROWS_AS(radon_image_from_json(wrong), Error);
}

TEST_CASE("nets round-trip") {
  RepuNet net;
  net.p = 3;
  net.W = Eigen::MatrixXd::Random(4, 2);
  net.b = Eigen::VectorXd::Random(4);
  net.a = Eigen::VectorXd::Random(4);
  net.c = -0.125;
  RepuNet back = repu_net_from_json(json::parse(dump17(to_json(net))));
  CHECK(back.p == 3);
  CHECK(back.W == net.W);
  CHECK(back.b == net.b);
  CHECK(back.a == net.a);
  CHECK(back.c == net.c);

  MonomialNet plain = monomial_net_from_json(to_json(net));
  CHECK(plain.v.rows() == 2);
  CHECK(plain.v.cols() == 3);
  CHECK(plain.v.isZero());
}

TEST_CASE("piecewise polynomials round-trip") {
  PiecewisePoly1D f({-1.0, 2.0}, {{1.0, 2.0}, {0.0, 1.0, 0.5}, {3.0}});
  PiecewisePoly1D back = piecewise_from_json(json::parse(dump17(to_json(f))));
  CHECK(back.breakpoints() == f.breakpoints());
  CHECK(back.pieces() == f.pieces());
}

TEST_CASE("builtin function specs") {
  FunctionSpec relu = load_function_spec("builtin:relu", 1, 3);
  REQUIRE(relu.piecewise.has_value());
  CHECK((*relu.piecewise)(2.0) == 8.0);
  CHECK((*relu.piecewise)(-2.0) == 0.0);
  FunctionSpec cube = load_function_spec("builtin:cube", 1, 3);
  CHECK((*cube.piecewise)(-2.0) == -8.0);
  FunctionSpec ab = load_function_spec("builtin:abs_power", 1, 1);
  CHECK((*ab.piecewise)(-2.0) == 2.0);
  FunctionSpec g = load_function_spec("builtin:gaussian", 3, 1);
  REQUIRE(g.field.has_value());
  CHECK((*g.field)(Eigen::Vector3d(1.0, 0.0, 0.0)) == doctest::Approx(std::exp(-0.5)));
  CHECK_THROWS_WITH_AS(load_function_spec("builtin:sine", 1, 1), doctest::Contains("unknown builtin"), Error);
  CHECK_THROWS_AS(load_function_spec("builtin:relu", 1, 2), Error);
}

TEST_CASE("function specs from files") {
  auto path = std::filesystem::temp_directory_path() / "repucost_spec_test.json";
  json net = {{"kind", "net"}, {"p", 1}, {"W", {{1.0}, {-1.0}}}, {"b", {0.0, 0.0}}, {"a", {1.0, 1.0}}, {"c", 0.0}};
  write_text_file(path.string(), dump17(net));
  FunctionSpec spec = load_function_spec(path.string(), 1, 1);
  CHECK(spec.kind == "net");
  REQUIRE(spec.piecewise.has_value());
  CHECK((*spec.piecewise)(-1.5) == 1.5);
  std::filesystem::remove(path);

  CHECK_THROWS_WITH_AS(load_function_spec(path.string(), 1, 1), doctest::Contains("cannot open"), Error);
  CHECK_THROWS_WITH_AS(function_spec_from_json({{"kind", "spline"}}), doctest::Contains("unknown function kind"), Error);

  json mix = {{"kind", "gaussian_mixture"}, {"dim", 3}, {"components", {{{"weight", 2.0}, {"sigma", 0.5}}}}};
  FunctionSpec m = function_spec_from_json(mix);
  CHECK((*m.field)(Eigen::Vector3d::Zero()) == 2.0);
}
