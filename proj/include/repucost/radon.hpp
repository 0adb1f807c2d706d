#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "repucost/field.hpp"
#include "repucost/sphere.hpp"

namespace repu {

// 1/(2 (2 pi)^(d-1)): f = gamma_d (-Delta)^((d-1)/2) R* R f for odd d.
double inversion_constant(int dim);

// Samples on (direction quadrature) x (uniform offset grid).
struct RadonImage {
  SphereQuadrature directions;
  OffsetGrid offsets;
  Eigen::MatrixXd values;  // directions.size() x offsets.count
  bool even = false;

  int dim() const { return directions.dim; }
  // max |v(w,b) - v(-w,-b)| over reflection-paired nodes; infinity if the set is not closed.
  double evenness_defect() const;
};

RadonImage make_image(const SphereQuadrature& dirs, const OffsetGrid& offsets,
                      const std::function<double(const Eigen::Ref<const Eigen::RowVectorXd>&, double)>& fn);

// Square plane window of half-width `half_width` (0 means the field radius) and spacing.
struct PlaneRule {
  double half_width = 0.0;
  double spacing = 0.5;
};

// Hyperplane integrals of f. d = 1 samples f(w b); d = 3 uses a tensor trapezoid rule on
// each plane. Planes farther than the field radius from the origin are set to 0.
RadonImage radon(const ScalarField& f, const SphereQuadrature& dirs, const OffsetGrid& offsets,
                 const PlaneRule& plane = {});
// Same quadrature for a single direction (no sphere-rule validation).
Eigen::VectorXd radon_line(const ScalarField& f, const Eigen::Ref<const Eigen::VectorXd>& w,
                           const OffsetGrid& offsets, const PlaneRule& plane = {});

// Offset interpolation with 4-point Lagrange stencils; throws "offset grid too small" when
// |t| exceeds B.
double interpolate_offset(const OffsetGrid& grid, const double* row, long stride, double t);

// Quadrature of phi(w, <w, x>) over the direction set.
double dual_radon(const RadonImage& phi, const Eigen::Ref<const Eigen::VectorXd>& x);
// One value per row of xs.
Eigen::VectorXd dual_radon_rows(const RadonImage& phi, const Eigen::Ref<const Eigen::MatrixXd>& xs);

// Spectral derivative of every direction row in b.
RadonImage differentiate_offsets(const RadonImage& img, int order, double tukey_alpha = 0.2);

// gamma_d R*((-d^2/db^2)^((d-1)/2) img) at each row of xs. Requires odd d and an even image.
Eigen::VectorXd invert_radon(const RadonImage& img, const Eigen::Ref<const Eigen::MatrixXd>& xs);

struct SliceReport {
  std::vector<double> taus;
  std::vector<double> radon_side_re, radon_side_im;  // (2 pi)^(-1/2) int R f(w,b) e^{-i b tau} db
  std::vector<double> volume_side_re, volume_side_im;  // (2 pi)^((d-1)/2) fhat(tau w)
  double max_rel_error = 0.0;  // max |difference| / max |volume side|
  double max_imag = 0.0;       // largest imaginary part on either side, relative to the same scale
};

// Volume transform uses the trapezoid rule on `volume`.
SliceReport fourier_slice_check(const ScalarField& f, const Eigen::Ref<const Eigen::VectorXd>& w,
                                const std::vector<double>& taus, const OffsetGrid& offsets,
                                const PlaneRule& plane, const CubeGrid& volume);

struct IntertwiningReport {
  int order = 0;
  double max_abs_error = 0.0;
  double reference_scale = 0.0;  // max |d^s/db^s R f|
  double max_rel_error = 0.0;
};

// Compares R(Delta^(s/2) f) with d^s/db^s R f on the given grid.
IntertwiningReport intertwining_check(const ScalarField& f, int order, const SphereQuadrature& dirs,
                                      const OffsetGrid& offsets, const PlaneRule& plane = {});

}  // namespace repu
