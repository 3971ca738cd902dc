#pragma once

#include <string>
#include <vector>

// The closed-form-versus-oracle check battery behind `purify verify`.
// Every check reports its worst residual; a check passes when the residual
// does not exceed the configured tolerance.

namespace purify {

struct VerifyOptions {
  int max_n = 8;                              // dense fidelity grid, <= 8
  int max_m = 6;                              // dense fidelity grid, <= 6
  double tolerance = 1e-10;
  std::vector<double> lambdas = {0.3, 0.5, 0.9};
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed = true;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace purify
