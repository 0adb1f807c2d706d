#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "repucost/error.hpp"
#include "repucost/repu_net.hpp"

namespace repu {

struct FitConfig {
  int p = 1;
  int width = 8;
  double lambda = 1e-4;
  Eigen::MatrixXd x;  // n x d
  Eigen::VectorXd y;
  int steps = 20000;
  // Adam step size, cosine-decayed from learning_rate to final_learning_rate.
  double learning_rate = 1e-2;
  double final_learning_rate = 1e-4;
  std::uint64_t seed = 0;
  double epsilon = 1e-8;        // smoothing in (a^2 + eps^2)^(1/p)
  int rebalance_period = 100;   // 0 disables rebalancing
  int checkpoint_period = 1000;
};

struct FitCheckpoint {
  int step = 0;
  double mse = 0.0;
  double objective = 0.0;
  CostBreakdown cost;
};

struct FitResult {
  RepuNet net;  // canonicalized
  std::vector<FitCheckpoint> trace;
  double final_mse = 0.0;
  double canonical_cost = 0.0;  // sum |a_i|^(1/p) with unit rows
  double measure_cost = 0.0;    // (sum |a_i|)^(1/p) with unit rows
};

class FitDivergence : public Error {
 public:
  FitDivergence(const std::string& what, std::vector<FitCheckpoint> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<FitCheckpoint>& trace() const { return trace_; }

 private:
  std::vector<FitCheckpoint> trace_;
};

// Full-batch Adam on mean squared error + lambda * 0.5 (||W||_F^2 + sum (a_i^2 + eps^2)^(1/p)),
// rebalancing each unit to |a_i|^(2/p) = ||w_i||^2 every rebalance_period steps.
FitResult fit(const FitConfig& config);

struct SweepRow {
  double lambda = 0.0;
  double mse = 0.0;
  double canonical_cost = 0.0;
  double measure_cost = 0.0;
};

std::vector<SweepRow> lambda_sweep(const FitConfig& config, const std::vector<double>& lambdas);

// n equally spaced points on [lo, hi] as an n x 1 matrix.
Eigen::MatrixXd linspace_inputs(int n, double lo, double hi);

}  // namespace repu
