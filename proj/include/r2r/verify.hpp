#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace r2r::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suites: "spectra" (formula vs. dense oracle), "bijection" (RSW maps and
/// tableau counts), "identities" (counting identities, eigenvalue structure,
/// bound chain), or "all". Each check is capped independently of n_max.
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, int n_max);

std::string format_report(const std::vector<CheckResult>& results);

}  // namespace r2r::verify
