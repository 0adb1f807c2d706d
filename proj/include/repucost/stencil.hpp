#pragma once

#include <Eigen/Dense>

#include "repucost/sphere.hpp"

namespace repu {

// Values on a CubeGrid in CubeGrid::points() order.
struct GridSamples {
  CubeGrid grid;
  Eigen::VectorXd values;
};

// Fourth-order central-difference Laplacian. The result lives on the grid shrunk by two
// nodes on every side.
GridSamples laplacian_fd(const GridSamples& in);

// Grid with `margin` extra nodes on every side at the same spacing.
CubeGrid expand_grid(const CubeGrid& g, int margin);

}  // namespace repu
