#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repucost/field.hpp"
#include "repucost/radon.hpp"
#include "repucost/repu_net.hpp"

namespace repu {

struct RNormGrid {
  SphereQuadrature directions;
  OffsetGrid offsets;
  PlaneRule plane;
};

struct RNormReport {
  int p = 1;
  int dim = 3;
  // ((gamma_d / p!) || d^(d+p)/db^(d+p) R f ||_TV)^(1/p)
  std::optional<double> direct_value;
  // (p!)^(1/p) * direct_value
  std::optional<double> rnorm_value;
  // max over the dictionary and both signs of (-(gamma_d/p!) <f, (-Delta)^((d+p)/2) R* phi>)^(1/p)
  std::optional<double> dual_lower_bound;
  std::optional<double> gap;  // (direct - dual) / direct when both are present
  int dictionary_size = 0;
  int best_member = -1;
  std::string pairing_route;
  int directions = 0;
  double offset_half_width = 0.0;
  double offset_spacing = 0.0;
};

RNormReport rnorm_direct(const ScalarField& f, int p, const RNormGrid& grid);
// Same computation starting from a precomputed R f.
RNormReport rnorm_direct_from_image(const RadonImage& radon_f, int p);

struct DictionaryOptions {
  int max_hermite_order = 7;
  std::vector<double> scales{0.8, 1.0, 1.25};
  // 0 keeps the plain windowed Hermite function; k > 0 uses tanh(k h) / max.
  std::vector<double> sharpness{0.0, 4.0, 16.0};
};

// Even test images Y(w) T(b) with sup |.| <= 1: windowed Hermite profiles in b (plain and
// tanh-saturated) times low-order spherical harmonics of matching parity.
std::vector<RadonImage> default_dictionary(const SphereQuadrature& dirs, const OffsetGrid& offsets,
                                           const DictionaryOptions& options = {});

// tanh(sharpness * D / max|D|) with D = d^(d+p)/db^(d+p) R f.
RadonImage near_optimal_test_function(const RadonImage& radon_f, int p, double sharpness = 16.0);

// Pairs against the test images on the points of `volume` inside the ball of radius B. The
// Laplacian is moved onto f: <f, (-Delta)^k R* phi> = <(-Delta)^k f, R* phi>, using the closed
// form when f has one and fourth-order finite differences otherwise.
RNormReport rnorm_dual_estimate(const ScalarField& f, int p, const std::vector<RadonImage>& dictionary,
                                const CubeGrid& volume);

// Measure-side value: weighted TV (1/psi) of the even part of to_measure(net), to the 1/p.
double rnorm_of_net(const RepuNet& net);
double rnorm_of_net(const MonomialNet& net);

}  // namespace repu
