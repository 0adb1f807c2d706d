#pragma once

#include <Eigen/Dense>

namespace repu {

// Tukey (tapered cosine) window of length n; alpha is the tapered fraction.
Eigen::VectorXd tukey_window(int n, double alpha);

// d^order/db^order of uniformly spaced samples by FFT, treating the windowed samples as
// periodic. For odd orders on even lengths the Nyquist mode is dropped. Each row of
// `samples` is differentiated independently.
Eigen::MatrixXd fourier_derivative_rows(const Eigen::MatrixXd& samples, double spacing, int order,
                                        double tukey_alpha = 0.2);
Eigen::VectorXd fourier_derivative(const Eigen::VectorXd& samples, double spacing, int order,
                                   double tukey_alpha = 0.2);

}  // namespace repu
