#pragma once

// Built-in invariant suite run by `su3holo selfcheck`.

#include <cstdint>
#include <string>
#include <vector>

namespace su3holo {

struct CheckResult {
  std::string name;
  bool passed = false;
  double error = 0.0;      // worst observed deviation
  double threshold = 0.0;  // pass if error < threshold
};

/// Runs every check on `samples` random generic octets drawn from `seed`.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed = 1, int samples = 100);

}  // namespace su3holo
