#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mahon/selftest.hpp"

using namespace mahon;

TEST_CASE("every built-in health check passes and reports a detail line") {
  const std::vector<SelfCheck> checks = run_selftest();
  REQUIRE(checks.size() == 8);
  for (const SelfCheck& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
    CHECK_FALSE(c.name.empty());
    CHECK_FALSE(c.detail.empty());
  }
  CHECK(all_passed(checks));
}
