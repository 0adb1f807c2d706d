#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "repucost/error.hpp"
#include "repucost/fit.hpp"
#include "repucost/infinite_net.hpp"
#include "repucost/json_io.hpp"
#include "repucost/parallel.hpp"
#include "repucost/radon.hpp"
#include "repucost/rnorm.hpp"
#include "repucost/univariate_cost.hpp"
#include "repucost/verify.hpp"

using namespace repu;

namespace {

constexpr const char* kToolVersion = "repucost 0.1.0";

// Bad input discovered after argument parsing; reported like a CLI usage error.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  int threads = 0;
  std::string out;
  std::string function;
  int p = 1;
  int dim = 3;
  double B = 8.0;
  double h = 0.01;
  int directions = 1000;
  double plane_spacing = 0.5;
  std::string image;
  std::string points;
  double ball = 2.0;
  double ball_spacing = 0.25;
  std::string mode = "both";
  double sharpness = 16.0;
  double volume_half_width = 6.0;
  double volume_spacing = 0.4;
  bool csv = false;
  // fit
  std::string data;
  int width = 8;
  double lambda = 1e-4;
  int steps = 20000;
  double learning_rate = 1e-2;
  double final_learning_rate = 1e-4;
  std::uint64_t seed = 0;
  int samples = 200;
  double lo = -3.0, hi = 3.0;
  std::vector<double> sweep;
  std::string trace_csv;
  // verify
  std::string suite;
};

json manifest(const std::string& sub, const json& inputs, const json& params, std::optional<std::uint64_t> seed,
              double wall) {
  json m = {{"subcommand", sub}, {"inputs", inputs}, {"parameters", params}, {"tool_version", kToolVersion},
            {"wall_time_s", wall}};
  m["seed"] = seed ? json(*seed) : json(nullptr);
  return m;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text << '\n';
  else
    write_text_file(o.out, text);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PiecewisePoly1D univariate(const FunctionSpec& spec) {
  if (spec.piecewise) return *spec.piecewise;
  if (spec.net && spec.net->base.dim() == 1) {
    std::vector<double> poly(spec.net->v.cols() + 1, 0.0);
    for (Eigen::Index k = 0; k < spec.net->v.cols(); ++k) poly[k + 1] = spec.net->v(0, k);
    return piecewise_from_net(spec.net->base).plus(PiecewisePoly1D::polynomial(poly));
  }
  throw UsageError("a univariate function (piecewise or 1-input net) is required");
}

const ScalarField& field_of(const FunctionSpec& spec) {
  if (!spec.field) throw UsageError("a field function (gaussian_mixture or builtin:gaussian) is required");
  return *spec.field;
}

SphereQuadrature directions_for(int dim, int n) {
  if (dim == 1) return line_directions();
  if (dim == 3) return fibonacci_sphere(n);
  throw UsageError("only d = 1 and d = 3 are supported for Radon-domain commands");
}

int run_cost1d(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  FunctionSpec spec = load_function_spec(o.function, 1, o.p);
  CostReport r = cost_1d(univariate(spec), o.p);
  json doc = {{"result", to_json(r)}};
  doc["manifest"] = manifest("cost1d", {{"function", o.function}}, {{"p", o.p}}, std::nullopt, seconds_since(t0));
  emit(o, dump17(doc));
  return 0;
}

int run_measure1d(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  FunctionSpec spec = load_function_spec(o.function, 1, o.p);
  OptimalMeasure m = build_optimal_measure(univariate(spec), o.p, o.B, o.h);
  json result = {{"measure", to_json(m.measure)},
                 {"c", m.c},
                 {"cost", to_json(m.report)},
                 {"achieved_norm", m.achieved_norm},
                 {"lp_case", to_string(m.lp_case)},
                 {"moment_residual", m.problem.max_residual},
                 {"simplex_iterations", m.problem.iterations}};
  json doc = {{"result", result}};
  doc["manifest"] = manifest("measure1d", {{"function", o.function}}, {{"p", o.p}, {"B", o.B}, {"h", o.h}},
                             std::nullopt, seconds_since(t0));
  emit(o, dump17(doc));
  return 0;
}

int run_radon(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  FunctionSpec spec = load_function_spec(o.function, o.dim, o.p);
  const ScalarField& f = field_of(spec);
  RadonImage img = radon(f, directions_for(f.dim, o.directions), OffsetGrid(o.B, o.h), PlaneRule{0.0, o.plane_spacing});
  json params = {{"dim", f.dim}, {"directions", img.directions.size()}, {"B", o.B}, {"h", o.h},
                 {"plane_spacing", o.plane_spacing}};
  json m = manifest("radon", {{"function", o.function}}, params, std::nullopt, seconds_since(t0));
  if (o.csv) {
    std::string text = "# manifest " + m.dump() + "\ndirection,b,value\n";
    for (int i = 0; i < img.directions.size(); ++i)
      for (int j = 0; j < img.offsets.count; ++j)
        text += std::to_string(i) + "," + g17(img.offsets.node(j)) + "," + g17(img.values(i, j)) + "\n";
    text.pop_back();
    emit(o, text);
  } else {
    json doc = {{"result", to_json(img)}, {"manifest", m}};
    emit(o, dump17(doc));
  }
  return 0;
}

RadonImage image_from_json(const json& j) {
  try {
    return radon_image_from_json(j.contains("result") ? j.at("result") : j);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed Radon image: ") + e.what());
  }
}

Eigen::MatrixXd points_from_options(const Options& o, int dim) {
  if (!o.points.empty()) {
    json j = read_json_file(o.points);
    Eigen::MatrixXd xs(j.size(), dim);
    for (std::size_t r = 0; r < j.size(); ++r) {
      if (static_cast<int>(j[r].size()) != dim) throw UsageError("point dimension mismatch");
      for (int c = 0; c < dim; ++c) xs(r, c) = j[r][c].get<double>();
    }
    return xs;
  }
  CubeGrid g{dim, -o.ball, o.ball, static_cast<int>(std::llround(2.0 * o.ball / o.ball_spacing)) + 1};
  Eigen::MatrixXd all = g.points();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < all.rows(); ++r)
    if (all.row(r).norm() <= o.ball + 1e-12) keep.push_back(r);
  Eigen::MatrixXd xs(keep.size(), dim);
  for (std::size_t q = 0; q < keep.size(); ++q) xs.row(q) = all.row(keep[q]);
  return xs;
}

int run_invert(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  RadonImage img = image_from_json(read_json_file(o.image));
  Eigen::MatrixXd xs = points_from_options(o, img.dim());
  Eigen::VectorXd vals = invert_radon(img, xs);
  json params = {{"ball", o.ball}, {"ball_spacing", o.ball_spacing}};
  json inputs = {{"image", o.image}};
  if (!o.points.empty()) inputs["points"] = o.points;
  json m = manifest("invert", inputs, params, std::nullopt, seconds_since(t0));
  if (o.csv) {
    std::string text = "# manifest " + m.dump() + "\n";
    for (int c = 0; c < xs.cols(); ++c) text += "x" + std::to_string(c) + ",";
    text += "value\n";
    for (Eigen::Index r = 0; r < xs.rows(); ++r) {
      for (int c = 0; c < xs.cols(); ++c) text += g17(xs(r, c)) + ",";
      text += g17(vals[r]) + "\n";
    }
    text.pop_back();
    emit(o, text);
  } else {
    json pts = json::array();
    for (Eigen::Index r = 0; r < xs.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < xs.cols(); ++c) row.push_back(xs(r, c));
      pts.push_back(row);
    }
    json doc = {{"result", {{"points", pts}, {"values", std::vector<double>(vals.data(), vals.data() + vals.size())}}},
                {"manifest", m}};
    emit(o, dump17(doc));
  }
  return 0;
}

json rnorm_json(const RNormReport& r) {
  json j = {{"p", r.p}, {"dim", r.dim}, {"dictionary_size", r.dictionary_size}, {"best_member", r.best_member},
            {"pairing_route", r.pairing_route}, {"directions", r.directions},
            {"offset_half_width", r.offset_half_width}, {"offset_spacing", r.offset_spacing}};
  auto put = [&j](const char* key, const std::optional<double>& v) { j[key] = v ? json(*v) : json(nullptr); };
  put("direct_value", r.direct_value);
  put("rnorm_value", r.rnorm_value);
  put("dual_lower_bound", r.dual_lower_bound);
  put("gap", r.gap);
  return j;
}

int run_rnorm(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.mode != "direct" && o.mode != "dual" && o.mode != "both") throw UsageError("--mode must be direct, dual or both");
  FunctionSpec spec = load_function_spec(o.function, o.dim, o.p);
  json params = {{"p", o.p}, {"mode", o.mode}};
  json result;
  if (spec.net) {
    // Finite nets: the measure-side value is exact, no Radon sampling needed.
    if (o.mode == "dual") throw UsageError("--mode dual needs a field function");
    double v = rnorm_of_net(*spec.net);
    result = {{"p", spec.net->base.p}, {"measure_side_value", v}, {"rnorm_value", v}};
  } else {
    const ScalarField& f = field_of(spec);
    RNormGrid grid{directions_for(f.dim, o.directions), OffsetGrid(o.B, o.h), PlaneRule{0.0, o.plane_spacing}};
    params.update({{"directions", grid.directions.size()}, {"B", o.B}, {"h", o.h}, {"plane_spacing", o.plane_spacing}});
    RadonImage rf = radon(f, grid.directions, grid.offsets, grid.plane);
    RNormReport rep = rnorm_direct_from_image(rf, o.p);
    if (o.mode != "direct") {
      std::vector<RadonImage> dict = default_dictionary(grid.directions, grid.offsets);
      dict.push_back(near_optimal_test_function(rf, o.p, o.sharpness));
      CubeGrid volume{f.dim, -o.volume_half_width, o.volume_half_width,
                      static_cast<int>(std::llround(2.0 * o.volume_half_width / o.volume_spacing)) + 1};
      RNormReport dual = rnorm_dual_estimate(f, o.p, dict, volume);
      rep.dual_lower_bound = dual.dual_lower_bound;
      rep.dictionary_size = dual.dictionary_size;
      rep.best_member = dual.best_member;
      rep.pairing_route = dual.pairing_route;
      if (rep.direct_value && *rep.direct_value > 0.0)
        rep.gap = (*rep.direct_value - *rep.dual_lower_bound) / *rep.direct_value;
      params.update({{"sharpness", o.sharpness}, {"volume_half_width", o.volume_half_width},
                     {"volume_spacing", o.volume_spacing}});
    }
    if (o.mode == "dual") {
      rep.direct_value.reset();
      rep.rnorm_value.reset();
      rep.gap.reset();
    }
    result = rnorm_json(rep);
  }
  json doc = {{"result", result}};
  doc["manifest"] = manifest("rnorm", {{"function", o.function}}, params, std::nullopt, seconds_since(t0));
  emit(o, dump17(doc));
  return 0;
}

int run_fit(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  FitConfig cfg;
  cfg.p = o.p;
  cfg.width = o.width;
  cfg.lambda = o.lambda;
  cfg.steps = o.steps;
  cfg.learning_rate = o.learning_rate;
  cfg.final_learning_rate = o.final_learning_rate;
  cfg.seed = o.seed;
  json inputs;
  if (!o.data.empty()) {
    json j = read_json_file(o.data);
    try {
      const json& xs = j.at("x");
      const json& ys = j.at("y");
      if (xs.size() != ys.size() || xs.empty()) throw UsageError("x and y must be non-empty and of equal length");
      int d = xs[0].is_array() ? static_cast<int>(xs[0].size()) : 1;
      cfg.x.resize(xs.size(), d);
      cfg.y.resize(ys.size());
      for (std::size_t r = 0; r < xs.size(); ++r) {
        if (xs[r].is_array()) {
          if (static_cast<int>(xs[r].size()) != d) throw UsageError("ragged x");
          for (int c = 0; c < d; ++c) cfg.x(r, c) = xs[r][c].get<double>();
        } else {
          cfg.x(r, 0) = xs[r].get<double>();
        }
        cfg.y[r] = ys[r].get<double>();
      }
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed data file: ") + e.what());
    }
    inputs["data"] = o.data;
  } else {
    if (o.function.empty()) throw UsageError("fit needs --data or --function");
    FunctionSpec spec = load_function_spec(o.function, 1, o.p);
    PiecewisePoly1D f = univariate(spec);
    cfg.x = linspace_inputs(o.samples, o.lo, o.hi);
    cfg.y.resize(o.samples);
    for (int r = 0; r < o.samples; ++r) cfg.y[r] = f(cfg.x(r, 0));
    inputs["function"] = o.function;
  }
  json params = {{"p", o.p}, {"width", o.width}, {"lambda", o.lambda}, {"steps", o.steps},
                 {"learning_rate", o.learning_rate}, {"final_learning_rate", o.final_learning_rate},
                 {"samples", cfg.x.rows()}};
  json result;
  try {
    if (o.sweep.empty()) {
      FitResult r = fit(cfg);
      json trace = json::array();
      for (const auto& cp : r.trace)
        trace.push_back({{"step", cp.step}, {"mse", cp.mse}, {"objective", cp.objective}, {"cost", to_json(cp.cost)}});
      if (!o.trace_csv.empty()) {
        std::string text = "step,mse,objective,frobenius_term,outer_term,balanced_cost\n";
        for (const auto& cp : r.trace)
          text += std::to_string(cp.step) + "," + g17(cp.mse) + "," + g17(cp.objective) + "," +
                  g17(cp.cost.frobenius_term) + "," + g17(cp.cost.outer_term) + "," + g17(cp.cost.balanced_cost) + "\n";
        text.pop_back();
        write_text_file(o.trace_csv, text);
        inputs["trace_csv"] = o.trace_csv;
      }
      result = {{"net", to_json(r.net)},
                {"final_mse", r.final_mse},
                {"canonical_cost", r.canonical_cost},
                {"measure_cost", r.measure_cost},
                {"trace", trace}};
    } else {
      json rows = json::array();
      for (const auto& row : lambda_sweep(cfg, o.sweep))
        rows.push_back({{"lambda", row.lambda}, {"mse", row.mse}, {"canonical_cost", row.canonical_cost},
                        {"measure_cost", row.measure_cost}});
      result = {{"sweep", rows}};
      params["sweep"] = o.sweep;
    }
  } catch (const FitDivergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  json doc = {{"result", result}};
  doc["manifest"] = manifest("fit", inputs, params, o.seed, seconds_since(t0));
  emit(o, dump17(doc));
  return 0;
}

int run_verify(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == o.suite;
  if (!known) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteReport rep = run_suite(o.suite);
  for (const auto& c : rep.checks) std::cerr << format_line(c) << '\n';
  json doc = {{"result", to_json(rep)}};
  doc["manifest"] = manifest("verify", json::object(), {{"suite", o.suite}}, std::nullopt, seconds_since(t0));
  emit(o, dump17(doc));
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representational cost of shallow RePU networks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker thread cap (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--out", o.out, "Write output here instead of stdout");

  auto add_function = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-f,--function,--target", o.function, "JSON function file or builtin:NAME");
    if (required) opt->required();
  };
  auto add_p = [&o](CLI::App* sub) { sub->add_option("-p,--power", o.p, "Odd RePU power")->capture_default_str(); };
  auto add_grid = [&o](CLI::App* sub) {
    sub->add_option("--half-width", o.B, "Offset half-width")->capture_default_str();
    sub->add_option("--spacing", o.h, "Offset spacing")->capture_default_str();
  };
  auto add_radon_grid = [&](CLI::App* sub) {
    add_grid(sub);
    sub->add_option("--dim", o.dim, "Input dimension for builtin fields")->capture_default_str();
    sub->add_option("--directions", o.directions, "Fibonacci directions (d = 3)")->capture_default_str();
    sub->add_option("--plane-spacing", o.plane_spacing, "In-plane quadrature spacing")->capture_default_str();
  };

  auto* cost1d = app.add_subcommand("cost1d", "Closed-form univariate cost");
  add_function(cost1d, true);
  add_p(cost1d);

  auto* measure1d = app.add_subcommand("measure1d", "Minimal-norm representing measure of a univariate function");
  add_function(measure1d, true);
  add_p(measure1d);
  add_grid(measure1d);

  auto* radon_cmd = app.add_subcommand("radon", "Sample the Radon transform of a field");
  add_function(radon_cmd, true);
  add_radon_grid(radon_cmd);
  radon_cmd->add_flag("--csv", o.csv, "CSV output");

  auto* invert = app.add_subcommand("invert", "Filtered back-projection of a Radon image");
  invert->add_option("--image", o.image, "Radon image JSON (output of `radon`)")->required();
  invert->add_option("--points", o.points, "JSON array of evaluation points");
  invert->add_option("--ball", o.ball, "Radius of the default point cloud")->capture_default_str();
  invert->add_option("--ball-spacing", o.ball_spacing, "Spacing of the default point cloud")->capture_default_str();
  invert->add_flag("--csv", o.csv, "CSV output");

  auto* rnorm_cmd = app.add_subcommand("rnorm", "R-norm of a field or finite net");
  add_function(rnorm_cmd, true);
  add_p(rnorm_cmd);
  add_radon_grid(rnorm_cmd);
  rnorm_cmd->add_option("--mode", o.mode, "direct, dual or both")->capture_default_str();
  rnorm_cmd->add_option("--sharpness", o.sharpness, "Saturation of the near-optimal test image")->capture_default_str();
  rnorm_cmd->add_option("--volume-half-width", o.volume_half_width, "Pairing cube half-width")->capture_default_str();
  rnorm_cmd->add_option("--volume-spacing", o.volume_spacing, "Pairing cube spacing")->capture_default_str();

  auto* fit_cmd = app.add_subcommand("fit", "Weight-decay training of a finite RePU net");
  add_function(fit_cmd, false);
  add_p(fit_cmd);
  fit_cmd->add_option("--data", o.data, "JSON {\"x\": [...], \"y\": [...]}");
  fit_cmd->add_option("-k,--width", o.width, "Hidden units")->capture_default_str();
  fit_cmd->add_option("--lambda", o.lambda, "Weight decay")->capture_default_str();
  fit_cmd->add_option("--steps", o.steps, "Adam steps")->capture_default_str();
  fit_cmd->add_option("--lr", o.learning_rate, "Initial step size")->capture_default_str();
  fit_cmd->add_option("--final-lr", o.final_learning_rate, "Final step size")->capture_default_str();
  fit_cmd->add_option("--seed", o.seed, "Initialization seed")->capture_default_str();
  fit_cmd->add_option("--samples", o.samples, "Sample count for --function targets")->capture_default_str();
  fit_cmd->add_option("--lo", o.lo, "Sample interval start")->capture_default_str();
  fit_cmd->add_option("--hi", o.hi, "Sample interval end")->capture_default_str();
  fit_cmd->add_option("--sweep", o.sweep, "Run one fit per lambda (comma separated)")->delimiter(',');
  fit_cmd->add_option("--trace-csv", o.trace_csv, "Also write the checkpoint trace as CSV");

  auto* verify = app.add_subcommand("verify", "Run a verification battery");
  verify->add_option("suite", o.suite, "theorem1d, radon, rnorm, fit or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    set_max_threads(o.threads);
    if (*cost1d) return run_cost1d(o);
    if (*measure1d) return run_measure1d(o);
    if (*radon_cmd) return run_radon(o);
    if (*invert) return run_invert(o);
    if (*rnorm_cmd) return run_rnorm(o);
    if (*fit_cmd) return run_fit(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
