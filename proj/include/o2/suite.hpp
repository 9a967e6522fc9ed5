#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace o2 {

struct SuiteOptions {
  /// Largest depth of the commutant brute force (run for 1..depth).
  unsigned depth = 3;
  /// Build B1 as (S1 + S1 W)/sqrt2 instead of (S1 + W S1)/sqrt2.
  bool right_multiplied_b1 = false;
  unsigned tower_steps = 3;
  std::uint64_t seed = 0x6f32;
};

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

/// Every exact identity of the calculus, grouped by id prefix
/// (cuntz, grading, fixed, crossed, tau, m2, tower, oracle, odometer,
/// commutant, zcross, cli). Failures are reported, never thrown.
std::vector<CheckResult> run_suite(const SuiteOptions& options = {});

}  // namespace o2
