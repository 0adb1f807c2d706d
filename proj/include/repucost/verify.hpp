#pragma once

#include <string>
#include <vector>

#include "repucost/json_io.hpp"

namespace repu {

struct CheckResult {
  std::string id;    // acceptance criterion number
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string summary;
  json details = json::object();
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Criteria 1 and 2: LP construction vs closed form, reconstruction.
std::vector<CheckResult> check_theorem_1d();
// Criterion 7: rescaling identities on random nets.
CheckResult check_rescaling();
// Criterion 8: even/odd norm bound on random measures.
CheckResult check_even_odd_bound();
// Criterion 3: inversion round trip and its refinement ratio.
CheckResult check_radon_round_trip();
// Criterion 4: Fourier slice and intertwining.
CheckResult check_radon_identities();
// Criterion 5: dual lower bound vs direct value.
CheckResult check_rnorm_duality();
// Criterion 6: density net identity and cost consistency.
CheckResult check_density_net();
// Criterion 9: training runs against the univariate oracle.
CheckResult check_training();

const std::vector<std::string>& suite_names();
// Throws Error for an unknown suite.
SuiteReport run_suite(const std::string& suite);

json to_json(const CheckResult& c);
json to_json(const SuiteReport& r);
// "[PASS] criterion 3: name | summary"
std::string format_line(const CheckResult& c);

}  // namespace repu
