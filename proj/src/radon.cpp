#include "repucost/radon.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "repucost/error.hpp"
#include "repucost/parallel.hpp"
#include "repucost/spectral.hpp"

namespace repu {

double inversion_constant(int dim) {
  if (dim < 1 || dim % 2 == 0) throw Error("inversion constant is defined here for odd d only");
  return 1.0 / (2.0 * std::pow(2.0 * std::numbers::pi, dim - 1));
}

double RadonImage::evenness_defect() const {
  if (!directions.reflection_closed()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int i = 0; i < directions.size(); ++i) {
    int ia = directions.antipode[i];
    for (int j = 0; j < offsets.count; ++j)
      worst = std::max(worst, std::abs(values(i, j) - values(ia, offsets.mirror(j))));
  }
  return worst;
}

RadonImage make_image(const SphereQuadrature& dirs, const OffsetGrid& offsets,
                      const std::function<double(const Eigen::Ref<const Eigen::RowVectorXd>&, double)>& fn) {
  RadonImage img;
  img.directions = dirs;
  img.offsets = offsets;
  img.values.resize(dirs.size(), offsets.count);
  for (int i = 0; i < dirs.size(); ++i) {
    Eigen::RowVectorXd w = dirs.nodes.row(i);
    for (int j = 0; j < offsets.count; ++j) img.values(i, j) = fn(w, offsets.node(j));
  }
  return img;
}

namespace {

void check_integrable(const ScalarField& f) {
  if (!(f.decay_rate > f.dim - 1)) throw Error("field not integrable on hyperplanes");
}

// Columns span the orthogonal complement of w.
Eigen::MatrixXd orthonormal_complement(const Eigen::VectorXd& w) {
  const int d = static_cast<int>(w.size());
  Eigen::MatrixXd basis(d, d);
  basis.col(0) = w;
  basis.rightCols(d - 1).setIdentity();
  // Identity columns minus the least useful axis keep the QR well conditioned.
  Eigen::Index drop;
  w.cwiseAbs().maxCoeff(&drop);
  int col = 1;
  for (int k = 0; k < d && col < d; ++k) {
    if (k == drop) continue;
    basis.col(col).setZero();
    basis(k, col) = 1.0;
    ++col;
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
  return q.rightCols(d - 1);
}

Eigen::VectorXd plane_integrals(const ScalarField& f, const Eigen::VectorXd& w, const OffsetGrid& offsets,
                                const PlaneRule& plane) {
  const int d = f.dim;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(offsets.count);
  if (d == 1) {
    for (int j = 0; j < offsets.count; ++j) {
      double x = w[0] * offsets.node(j);
      out[j] = f.value(&x);
    }
    return out;
  }
  const double half = plane.half_width > 0.0 ? plane.half_width : f.radius;
  const double step = plane.spacing;
  if (!(step > 0.0)) throw Error("plane spacing must be positive");
  const int per_axis = 2 * static_cast<int>(std::ceil(half / step)) + 1;
  const double start = -step * (per_axis / 2);
  const Eigen::MatrixXd comp = orthonormal_complement(w);
  const double cell = std::pow(step, d - 1);
  const double r2 = f.radius * f.radius;
  // In-plane displacements inside the window and the radius ball, sorted by length.
  std::vector<std::pair<double, int>> order;
  std::vector<double> disp;
  {
    std::vector<int> idx(d - 1, 0);
    Eigen::VectorXd y(d - 1), x(d);
    while (true) {
      double yy = 0.0;
      for (int k = 0; k < d - 1; ++k) {
        y[k] = start + idx[k] * step;
        yy += y[k] * y[k];
      }
      if (yy <= r2) {
        x.noalias() = comp * y;
        order.emplace_back(yy, static_cast<int>(order.size()));
        disp.insert(disp.end(), x.data(), x.data() + d);
      }
      int k = d - 2;
      while (k >= 0 && ++idx[k] == per_axis) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<double> sorted_disp(disp.size()), sorted_len(order.size());
  for (std::size_t m = 0; m < order.size(); ++m) {
    sorted_len[m] = order[m].first;
    std::copy_n(disp.begin() + order[m].second * d, d, sorted_disp.begin() + m * d);
  }
  std::vector<double> x(d);
  for (int j = 0; j < offsets.count; ++j) {
    const double b = offsets.node(j);
    const double room = r2 - b * b;
    if (room < 0.0) continue;
    const std::size_t used = std::upper_bound(sorted_len.begin(), sorted_len.end(), room) - sorted_len.begin();
    double sum = 0.0;
    for (std::size_t m = 0; m < used; ++m) {
      const double* q = sorted_disp.data() + m * d;
      for (int k = 0; k < d; ++k) x[k] = b * w[k] + q[k];
      sum += f.value(x.data());
    }
    double val = sum * cell;
    if (!std::isfinite(val) || std::abs(val) > 1e250) throw Error("field not integrable on hyperplanes");
    out[j] = val;
  }
  return out;
}

}  // namespace

Eigen::VectorXd radon_line(const ScalarField& f, const Eigen::Ref<const Eigen::VectorXd>& w,
                           const OffsetGrid& offsets, const PlaneRule& plane) {
  if (w.size() != f.dim) throw Error("dimension mismatch");
  check_integrable(f);
  return plane_integrals(f, w, offsets, plane);
}

RadonImage radon(const ScalarField& f, const SphereQuadrature& dirs, const OffsetGrid& offsets,
                 const PlaneRule& plane) {
  if (f.dim % 2 == 0) throw Error("even dimension is not supported");
  if (dirs.dim != f.dim) throw Error("dimension mismatch");
  check_integrable(f);
  RadonImage img;
  img.directions = dirs;
  img.offsets = offsets;
  img.values.resize(dirs.size(), offsets.count);
  parallel_for(dirs.size(), [&](std::size_t i) {
    Eigen::VectorXd w = dirs.nodes.row(i).transpose();
    img.values.row(i) = plane_integrals(f, w, offsets, plane).transpose();
  });
  img.even = true;
  return img;
}

double interpolate_offset(const OffsetGrid& grid, const double* row, long stride, double t) {
  const double B = grid.half_width;
  if (std::abs(t) > B * (1.0 + 1e-12)) throw Error("offset grid too small");
  double u = (t + B) / grid.spacing;
  int i = static_cast<int>(std::floor(u));
  i = std::clamp(i, 1, grid.count - 3);
  double s = u - i;
  double f0 = row[(i - 1) * stride], f1 = row[i * stride], f2 = row[(i + 1) * stride],
         f3 = row[(i + 2) * stride];
  double sm1 = s - 1.0, sm2 = s - 2.0, sp1 = s + 1.0;
  return -s * sm1 * sm2 / 6.0 * f0 + sp1 * sm1 * sm2 / 2.0 * f1 - sp1 * s * sm2 / 2.0 * f2 +
         sp1 * s * sm1 / 6.0 * f3;
}

double dual_radon(const RadonImage& phi, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != phi.dim()) throw Error("dimension mismatch");
  if (phi.offsets.count < 4) throw Error("offset grid too small");
  const long stride = phi.values.rows();  // column-major storage
  double s = 0.0;
  for (int i = 0; i < phi.directions.size(); ++i) {
    double t = phi.directions.nodes.row(i).dot(x);
    s += phi.directions.weights[i] * interpolate_offset(phi.offsets, phi.values.data() + i, stride, t);
  }
  return s;
}

Eigen::VectorXd dual_radon_rows(const RadonImage& phi, const Eigen::Ref<const Eigen::MatrixXd>& xs) {
  if (xs.cols() != phi.dim()) throw Error("dimension mismatch");
  if (phi.offsets.count < 4) throw Error("offset grid too small");
  const Eigen::Index n = xs.rows();
  Eigen::VectorXd out(n);
  // Row-major copy so each direction's offsets are contiguous.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> vals = phi.values;
  const int nd = phi.directions.size();
  const Eigen::Index block = 64;
  const std::size_t blocks = static_cast<std::size_t>((n + block - 1) / block);
  parallel_for(blocks, [&](std::size_t bi) {
    Eigen::Index lo = static_cast<Eigen::Index>(bi) * block, len = std::min(block, n - lo);
    Eigen::MatrixXd t = phi.directions.nodes * xs.middleRows(lo, len).transpose();  // nd x len
    for (Eigen::Index r = 0; r < len; ++r) {
      double s = 0.0;
      for (int i = 0; i < nd; ++i)
        s += phi.directions.weights[i] * interpolate_offset(phi.offsets, vals.data() + i * vals.cols(), 1, t(i, r));
      out[lo + r] = s;
    }
  });
  return out;
}

RadonImage differentiate_offsets(const RadonImage& img, int order, double tukey_alpha) {
  RadonImage out = img;
  out.values = fourier_derivative_rows(img.values, img.offsets.spacing, order, tukey_alpha);
  out.even = img.even && order % 2 == 0;
  return out;
}

Eigen::VectorXd invert_radon(const RadonImage& img, const Eigen::Ref<const Eigen::MatrixXd>& xs) {
  const int d = img.dim();
  if (d % 2 == 0) throw Error("inversion requires odd dimension");
  double scale = img.values.cwiseAbs().maxCoeff();
  if (img.evenness_defect() > 1e-8 * std::max(1.0, scale)) throw Error("image is not even");
  RadonImage filtered = differentiate_offsets(img, d - 1);
  if (((d - 1) / 2) % 2 == 1) filtered.values = -filtered.values;
  return inversion_constant(d) * dual_radon_rows(filtered, xs);
}

SliceReport fourier_slice_check(const ScalarField& f, const Eigen::Ref<const Eigen::VectorXd>& w,
                                const std::vector<double>& taus, const OffsetGrid& offsets,
                                const PlaneRule& plane, const CubeGrid& volume) {
  const int d = f.dim;
  if (volume.dim != d) throw Error("dimension mismatch");
  Eigen::VectorXd dir = w.normalized();
  Eigen::VectorXd line = radon_line(f, dir, offsets, plane);
  Eigen::MatrixXd pts = volume.points();
  Eigen::VectorXd fv(pts.rows()), proj = pts * dir;
  for (Eigen::Index r = 0; r < pts.rows(); ++r) fv[r] = f.value(pts.row(r).transpose().eval().data());
  const double cell = std::pow(volume.spacing(), d);
  const double two_pi = 2.0 * std::numbers::pi;

  SliceReport rep;
  rep.taus = taus;
  for (double tau : taus) {
    std::complex<double> lhs(0.0), rhs(0.0);
    for (int j = 0; j < offsets.count; ++j) {
      double b = offsets.node(j);
      lhs += offsets.trapezoid_weight(j) * line[j] * std::polar(1.0, -b * tau);
    }
    lhs /= std::sqrt(two_pi);
    for (Eigen::Index r = 0; r < pts.rows(); ++r) rhs += fv[r] * std::polar(1.0, -proj[r] * tau);
    rhs *= cell * std::pow(two_pi, -0.5 * d) * std::pow(two_pi, 0.5 * (d - 1));
    rep.radon_side_re.push_back(lhs.real());
    rep.radon_side_im.push_back(lhs.imag());
    rep.volume_side_re.push_back(rhs.real());
    rep.volume_side_im.push_back(rhs.imag());
  }
  double scale = 0.0, diff = 0.0, imag = 0.0;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    std::complex<double> l(rep.radon_side_re[k], rep.radon_side_im[k]);
    std::complex<double> r(rep.volume_side_re[k], rep.volume_side_im[k]);
    scale = std::max(scale, std::abs(r));
    diff = std::max(diff, std::abs(l - r));
    imag = std::max({imag, std::abs(l.imag()), std::abs(r.imag())});
  }
  rep.max_rel_error = scale > 0.0 ? diff / scale : diff;
  rep.max_imag = scale > 0.0 ? imag / scale : imag;
  return rep;
}

IntertwiningReport intertwining_check(const ScalarField& f, int order, const SphereQuadrature& dirs,
                                      const OffsetGrid& offsets, const PlaneRule& plane) {
  if (order < 0 || order % 2 != 0) throw Error("intertwining order must be even");
  RadonImage direct = radon(f.laplacian_iterate(order / 2), dirs, offsets, plane);
  RadonImage spectral = differentiate_offsets(radon(f, dirs, offsets, plane), order);
  IntertwiningReport rep;
  rep.order = order;
  rep.max_abs_error = (direct.values - spectral.values).cwiseAbs().maxCoeff();
  rep.reference_scale = spectral.values.cwiseAbs().maxCoeff();
  rep.max_rel_error = rep.reference_scale > 0.0 ? rep.max_abs_error / rep.reference_scale : rep.max_abs_error;
  return rep;
}

}  // namespace repu
