#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recip {

struct SelfCheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in invariant suite and reproductions of the worked examples.
std::vector<SelfCheckResult> run_selfcheck(std::uint64_t seed = 20240601);

}  // namespace recip
