// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero when any criterion fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "repucost/univariate_cost.hpp"
#include "repucost/verify.hpp"

using namespace repu;

namespace {

// Independent values for the canonical one-dimensional functions; a closed form that drifts
// from these would make criterion 1 meaningless, so they gate it.
bool closed_form_anchors_hold() {
  for (int p : {1, 3, 5}) {
    std::vector<double> mono(p + 1, 0.0), neg(p + 1, 0.0), zero(p + 1, 0.0);
    mono[p] = 1.0;
    neg[p] = -1.0;
    double relu = cost_1d(PiecewisePoly1D({0.0}, {zero, mono}), p).cost;
    double cube = cost_1d(PiecewisePoly1D::polynomial(mono), p).cost;
    double absp = cost_1d(PiecewisePoly1D({0.0}, {neg, mono}), p).cost;
    const double two = std::pow(2.0, 1.0 / p);
    if (std::abs(relu - 1.0) > 1e-12 || std::abs(cube - two) > 1e-12 || std::abs(absp - two) > 1e-12) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<CheckResult> results;
  auto run = [&](const std::string& id, const std::function<std::vector<CheckResult>()>& fn) {
    try {
      for (auto& c : fn()) results.push_back(std::move(c));
    } catch (const std::exception& e) {
      CheckResult c;
      c.id = id;
      c.name = "exception";
      c.summary = e.what();
      results.push_back(c);
    }
  };

  run("1", [] {
    std::vector<CheckResult> r = check_theorem_1d();
    if (!closed_form_anchors_hold())
      for (auto& c : r)
        if (c.id == "1") {
          c.passed = false;
          c.summary += "; closed form disagrees with the canonical values";
        }
    return r;
  });
  run("3", [] { return std::vector<CheckResult>{check_radon_round_trip()}; });
  run("4", [] { return std::vector<CheckResult>{check_radon_identities()}; });
  run("5", [] { return std::vector<CheckResult>{check_rnorm_duality()}; });
  run("6", [] { return std::vector<CheckResult>{check_density_net()}; });
  run("7", [] { return std::vector<CheckResult>{check_rescaling()}; });
  run("8", [] { return std::vector<CheckResult>{check_even_odd_bound()}; });
  run("9", [] { return std::vector<CheckResult>{check_training()}; });

  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return std::stoi(a.id) < std::stoi(b.id); });
  int failed = 0;
  for (const auto& c : results) {
    std::cout << format_line(c) << '\n';
    if (!c.passed) ++failed;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
