#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "repucost/field.hpp"
#include "repucost/measure.hpp"
#include "repucost/piecewise_poly.hpp"
#include "repucost/radon.hpp"
#include "repucost/repu_net.hpp"
#include "repucost/univariate_cost.hpp"

namespace repu {

using nlohmann::json;

// Serializes with every floating-point number printed as %.17g.
std::string dump17(const json& j, int indent = 2);

json to_json(const AtomicMeasure& mu);
json to_json(const GridMeasure& mu);
json to_json(const SphereQuadrature& q);
json to_json(const RepuNet& net);
json to_json(const MonomialNet& net);
json to_json(const PiecewisePoly1D& f);
json to_json(const CostReport& r);
json to_json(const CostBreakdown& c);
json to_json(const RadonImage& img);

AtomicMeasure atomic_measure_from_json(const json& j);
GridMeasure grid_measure_from_json(const json& j);
SphereQuadrature sphere_quadrature_from_json(const json& j);
RepuNet repu_net_from_json(const json& j);
// Accepts a plain net; "v" is optional and defaults to zeros.
MonomialNet monomial_net_from_json(const json& j);
PiecewisePoly1D piecewise_from_json(const json& j);
RadonImage radon_image_from_json(const json& j);
// Accepts {"kind":"gaussian_mixture", "dim":d, "components":[{"weight","center","sigma","harmonic"}]}.
ScalarField field_from_json(const json& j);

// A function given as JSON ("kind": "piecewise" | "net" | "gaussian_mixture") or as
// "builtin:gaussian" / "builtin:relu" / "builtin:cube" / "builtin:abs_power".
struct FunctionSpec {
  std::string kind;
  std::optional<PiecewisePoly1D> piecewise;
  std::optional<MonomialNet> net;
  std::optional<ScalarField> field;
  json source;
};

// `arg` is either a builtin name or a path to a JSON file. `dim` and `p` select builtin variants.
FunctionSpec load_function_spec(const std::string& arg, int dim, int p);
FunctionSpec function_spec_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace repu
