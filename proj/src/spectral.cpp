#include "repucost/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "repucost/error.hpp"

namespace repu {

namespace {
std::mutex g_planner_mutex;  // FFTW planning is not thread-safe
}

Eigen::VectorXd tukey_window(int n, double alpha) {
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  if (n < 2 || alpha <= 0.0) return w;
  alpha = std::min(alpha, 1.0);
  const double edge = 0.5 * alpha * (n - 1);
  for (int j = 0; j < n; ++j) {
    double pos = std::min<double>(j, n - 1 - j);
    if (pos < edge) w[j] = 0.5 * (1.0 - std::cos(std::numbers::pi * pos / edge));
  }
  return w;
}

Eigen::MatrixXd fourier_derivative_rows(const Eigen::MatrixXd& samples, double spacing, int order,
                                        double tukey_alpha) {
  if (order < 0) throw Error("derivative order must be nonnegative");
  const int rows = static_cast<int>(samples.rows()), n = static_cast<int>(samples.cols());
  if (order == 0 || n == 0) return samples;
  if (n < 4) throw Error("too few offset samples for spectral differentiation");
  const int modes = n / 2 + 1;
  double* real = fftw_alloc_real(n);
  fftw_complex* spec = fftw_alloc_complex(modes);
  fftw_plan forward, backward;
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    forward = fftw_plan_dft_r2c_1d(n, real, spec, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(n, spec, real, FFTW_ESTIMATE);
  }
  const Eigen::VectorXd window = tukey_window(n, tukey_alpha);
  std::vector<std::complex<double>> multiplier(modes);
  for (int m = 0; m < modes; ++m) {
    double k = 2.0 * std::numbers::pi * m / (n * spacing);
    multiplier[m] = std::pow(std::complex<double>(0.0, k), order) / static_cast<double>(n);
  }
  if (n % 2 == 0 && order % 2 == 1) multiplier[modes - 1] = 0.0;
  Eigen::MatrixXd out(rows, n);
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < n; ++j) real[j] = samples(r, j) * window[j];
    fftw_execute(forward);
    for (int m = 0; m < modes; ++m) {
      std::complex<double> z(spec[m][0], spec[m][1]);
      z *= multiplier[m];
      spec[m][0] = z.real();
      spec[m][1] = z.imag();
    }
    fftw_execute(backward);
    for (int j = 0; j < n; ++j) out(r, j) = real[j];
  }
  {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  fftw_free(real);
  fftw_free(spec);
  return out;
}

Eigen::VectorXd fourier_derivative(const Eigen::VectorXd& samples, double spacing, int order,
                                   double tukey_alpha) {
  Eigen::MatrixXd row = samples.transpose();
  return fourier_derivative_rows(row, spacing, order, tukey_alpha).row(0).transpose();
}

}  // namespace repu
