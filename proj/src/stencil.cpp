#include "repucost/stencil.hpp"

#include "repucost/error.hpp"

namespace repu {

CubeGrid expand_grid(const CubeGrid& g, int margin) {
  CubeGrid out = g;
  double h = g.spacing();
  out.lo = g.lo - margin * h;
  out.hi = g.hi + margin * h;
  out.n = g.n + 2 * margin;
  return out;
}

GridSamples laplacian_fd(const GridSamples& in) {
  const CubeGrid& g = in.grid;
  if (g.n < 5) throw Error("grid too small for the Laplacian stencil");
  if (in.values.size() != g.total()) throw Error("grid sample count mismatch");
  GridSamples out;
  out.grid = expand_grid(g, -2);
  const int d = g.dim, n = g.n, m = out.grid.n;
  const double h = g.spacing();
  const double scale = 1.0 / (12.0 * h * h);
  std::vector<long long> stride(d);
  stride[d - 1] = 1;
  for (int k = d - 2; k >= 0; --k) stride[k] = stride[k + 1] * n;
  out.values.resize(out.grid.total());
  std::vector<int> idx(d, 0);
  for (long long o = 0; o < out.grid.total(); ++o) {
    long long rem = o, base = 0;
    for (int k = d - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % m) + 2;
      rem /= m;
      base += idx[k] * stride[k];
    }
    double s = 0.0;
    for (int k = 0; k < d; ++k) {
      long long st = stride[k];
      s += -in.values[base - 2 * st] + 16.0 * in.values[base - st] - 30.0 * in.values[base] +
           16.0 * in.values[base + st] - in.values[base + 2 * st];
    }
    out.values[o] = s * scale;
  }
  return out;
}

}  // namespace repu
