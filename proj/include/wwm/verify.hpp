#pragma once

#include <string>
#include <vector>

#include "wwm/grid.hpp"

namespace wwm {

struct CheckResult {
  std::string module;
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst deviation observed
  double tolerance = 0.0;  // bound it was tested against
  std::string detail;
};

struct VerifyOptions {
  int n = 256;
  double extent = 20.0;
  double hbar = 1.0;
  double tol_scale = 1.0;  // quick mode relaxes tolerances by 100
  bool quick = false;

  static VerifyOptions quick_mode();
};

// Runs every module invariant (grid round trips, transform identities,
// operator algebra, weak-value route consistency, reconstruction checks).
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

// Deterministic JUnit-style XML (no timestamps or timing attributes).
std::string junit_report(const std::vector<CheckResult>& results);

}  // namespace wwm
