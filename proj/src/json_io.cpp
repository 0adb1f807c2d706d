#include "repucost/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "repucost/error.hpp"

namespace repu {

namespace {

void dump_into(const json& j, int indent, int depth, std::string& out) {
  auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      // Numeric arrays stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && e.is_primitive();
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_into(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      break;
    }
    default:
      out += j.dump();
  }
}

Eigen::VectorXd vector_from(const json& j) {
  auto v = j.get<std::vector<double>>();
  return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json vector_to(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Eigen::MatrixXd matrix_from(const json& j, Eigen::Index cols_if_empty = 0) {
  auto rows = j.get<std::vector<std::vector<double>>>();
  Eigen::Index cols = rows.empty() ? cols_if_empty : static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != cols) throw Error("ragged matrix in JSON");
    for (Eigen::Index c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][c];
  }
  return m;
}

json matrix_to(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_to(m.row(r).transpose()));
  return rows;
}

}  // namespace

std::string dump17(const json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

json to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back(json::array({vector_to(a.w), a.b, a.mass}));
  return {{"dim", mu.dim()}, {"atoms", atoms}};
}

AtomicMeasure atomic_measure_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) atoms.push_back({vector_from(a.at(0)), a.at(1).get<double>(), a.at(2).get<double>()});
  return AtomicMeasure(dim, std::move(atoms));
}

json to_json(const SphereQuadrature& q) { return {{"nodes", matrix_to(q.nodes)}, {"weights", vector_to(q.weights)}}; }

SphereQuadrature sphere_quadrature_from_json(const json& j) {
  if (j.contains("fibonacci")) return fibonacci_sphere(j.at("fibonacci").get<int>());
  return make_sphere_quadrature(matrix_from(j.at("nodes")), vector_from(j.at("weights")));
}

json to_json(const GridMeasure& mu) {
  return {{"dim", mu.dim()},
          {"directions", to_json(mu.directions)},
          {"offsets", {{"B", mu.offsets.half_width}, {"h", mu.offsets.spacing}}},
          {"density", matrix_to(mu.density)}};
}

GridMeasure grid_measure_from_json(const json& j) {
  SphereQuadrature dirs = sphere_quadrature_from_json(j.at("directions"));
  if (j.contains("dim") && j.at("dim").get<int>() != dirs.dim) throw Error("grid measure dimension mismatch");
  OffsetGrid grid(j.at("offsets").at("B").get<double>(), j.at("offsets").at("h").get<double>());
  return GridMeasure(std::move(dirs), grid, matrix_from(j.at("density")));
}

json to_json(const RepuNet& net) {
  return {{"p", net.p}, {"W", matrix_to(net.W)}, {"b", vector_to(net.b)}, {"a", vector_to(net.a)}, {"c", net.c}};
}

json to_json(const MonomialNet& net) {
  json j = to_json(net.base);
  j["v"] = matrix_to(net.v);
  return j;
}

RepuNet repu_net_from_json(const json& j) {
  RepuNet net;
  net.p = j.at("p").get<int>();
  net.b = vector_from(j.at("b"));
  net.a = vector_from(j.at("a"));
  net.W = matrix_from(j.at("W"), j.value("dim", 1));
  net.c = j.value("c", 0.0);
  net.validate();
  return net;
}

MonomialNet monomial_net_from_json(const json& j) {
  MonomialNet net;
  net.base = repu_net_from_json(j);
  if (j.contains("v") && !j.at("v").is_null())
    net.v = matrix_from(j.at("v"), net.base.p);
  else
    net.v = Eigen::MatrixXd::Zero(net.base.dim(), net.base.p);
  net.validate();
  return net;
}

json to_json(const PiecewisePoly1D& f) {
  return {{"kind", "piecewise"}, {"breakpoints", f.breakpoints()}, {"pieces", f.pieces()}};
}

PiecewisePoly1D piecewise_from_json(const json& j) {
  return PiecewisePoly1D(j.value("breakpoints", std::vector<double>{}),
                         j.at("pieces").get<std::vector<std::vector<double>>>(), j.value("continuity", -1));
}

json to_json(const CostReport& r) {
  return {{"integral_term", r.integral_term},
          {"boundary_term", r.boundary_term},
          {"cost", r.cost},
          {"active_case", to_string(r.active_case)}};
}

json to_json(const CostBreakdown& c) {
  return {{"frobenius_term", c.frobenius_term},
          {"outer_term", c.outer_term},
          {"balanced_cost", c.balanced_cost},
          {"canonical_cost", c.canonical_cost}};
}

json to_json(const RadonImage& img) {
  return {{"dim", img.dim()},
          {"directions", to_json(img.directions)},
          {"offsets", {{"B", img.offsets.half_width}, {"h", img.offsets.spacing}}},
          {"even", img.even},
          {"values", matrix_to(img.values)}};
}

RadonImage radon_image_from_json(const json& j) {
  RadonImage img;
  img.directions = sphere_quadrature_from_json(j.at("directions"));
  img.offsets = OffsetGrid(j.at("offsets").at("B").get<double>(), j.at("offsets").at("h").get<double>());
  img.values = matrix_from(j.at("values"));
  if (img.values.rows() != img.directions.size() || img.values.cols() != img.offsets.count)
    throw Error("Radon image values do not match the direction and offset grids");
  img.even = j.value("even", false);
  return img;
}

ScalarField field_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<GaussianComponent> parts;
  for (const auto& c : j.at("components")) {
    GaussianComponent g;
    g.weight = c.value("weight", 1.0);
    g.sigma = c.value("sigma", 1.0);
    g.harmonic = c.value("harmonic", false);
    g.center = c.contains("center") ? vector_from(c.at("center")) : Eigen::VectorXd::Zero(dim);
    parts.push_back(g);
  }
  return gaussian_mixture_field(dim, std::move(parts));
}

FunctionSpec function_spec_from_json(const json& j) {
  FunctionSpec spec;
  spec.source = j;
  spec.kind = j.at("kind").get<std::string>();
  if (spec.kind == "piecewise") {
    spec.piecewise = piecewise_from_json(j);
  } else if (spec.kind == "net") {
    spec.net = monomial_net_from_json(j);
    if (spec.net->base.dim() == 1) spec.piecewise = piecewise_from_net(spec.net->base);
  } else if (spec.kind == "gaussian_mixture") {
    spec.field = field_from_json(j);
  } else {
    throw Error("unknown function kind: " + spec.kind);
  }
  return spec;
}

FunctionSpec load_function_spec(const std::string& arg, int dim, int p) {
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) {
    std::string name = arg.substr(prefix.size());
    FunctionSpec spec;
    spec.source = arg;
    if (name == "gaussian") {
      spec.kind = "gaussian_mixture";
      spec.field = standard_gaussian_field(dim);
      return spec;
    }
    // Univariate builtins for the given odd p.
    require_odd_power(p);
    std::vector<double> mono(p + 1, 0.0);
    mono[p] = 1.0;
    std::vector<double> mirrored = mono;
    mirrored[p] = -1.0;
    std::vector<double> zero(p + 1, 0.0);
    spec.kind = "piecewise";
    if (name == "relu")
      spec.piecewise = PiecewisePoly1D({0.0}, {zero, mono});
    else if (name == "cube" || name == "monomial")
      spec.piecewise = PiecewisePoly1D::polynomial(mono);
    else if (name == "abs_power")
      spec.piecewise = PiecewisePoly1D({0.0}, {mirrored, mono});
    else
      throw Error("unknown builtin function: " + name);
    return spec;
  }
  return function_spec_from_json(read_json_file(arg));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text << '\n';
}

}  // namespace repu
