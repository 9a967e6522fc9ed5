#include <doctest.h>

#include <algorithm>

#include "o2/suite.hpp"

using namespace o2;

TEST_SUITE("suite") {

TEST_CASE("all checks pass") {
  const auto results = run_suite();
  CHECK(results.size() > 50);
  for (const auto& r : results) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.passed);
  }
  CHECK(std::any_of(results.begin(), results.end(), [](const auto& r) { return r.id == "commutant.d3"; }));
}

TEST_CASE("right-multiplied B1 fails") {
  const auto results = run_suite({.depth = 1, .right_multiplied_b1 = true});
  const auto it = std::find_if(results.begin(), results.end(),
                               [](const auto& r) { return r.id == "tau.b1.isometry"; });
  REQUIRE(it != results.end());
  CHECK_FALSE(it->passed);
  CHECK(it->detail == "B1'B1 = 1 V+(D(0,0),D(0,0));1 V-(D(0,0),D(0,0))");
  const auto variant = std::find_if(results.begin(), results.end(),
                                    [](const auto& r) { return r.id == "tau.b1.right.variant"; });
  CHECK(variant->passed);
}

}
