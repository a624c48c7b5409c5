#pragma once

#include <string>
#include <vector>

namespace mahon {

// One named health check: worked examples, enumeration counts, distribution
// products, character values, catalog integrity, and a verifier spot run.
struct SelfCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // expected/got summary, or the caught error
};

std::vector<SelfCheck> run_selftest();

bool all_passed(const std::vector<SelfCheck>& checks);

}  // namespace mahon
