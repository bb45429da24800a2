#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mshydro {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the invariant checks of every library module (desk-scale sizes).
std::vector<CheckResult> run_selftest();

/// Prints one PASS/FAIL line per check; returns true when all pass.
bool report_selftest(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace mshydro
