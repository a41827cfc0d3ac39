#include "doctest.h"
#include "support.hpp"
#include "tridiss/geometry.hpp"
#include "tridiss/grid_oracle.hpp"

using namespace tridiss;

TEST_SUITE("oracle") {
  TEST_CASE("side 1 and 2") {
    CHECK(oracle::grid_dissections(1).empty());
    const auto two = oracle::grid_dissections(2);
    REQUIRE(two.size() == 1);
    CHECK(*two.begin() == canonical_signature(test_support::intercalate_dissection()).text);
    CHECK_THROWS_AS(oracle::grid_dissections(9), std::invalid_argument);
  }

  TEST_CASE("grid tilings are canonical valid dissections of least scale") {
    for (const auto& sig : oracle::grid_dissections_up_to(4)) {
      const Dissection d = parse_signature(sig);
      validate_dissection(d, true);
      CHECK(canonical_signature(d).text == sig);
      CHECK(rescale_integer(d).scale <= 4);
      CHECK(d.size() >= 4);
    }
  }

  TEST_CASE("side 3 contains the unit grid") {
    const auto three = oracle::grid_dissections(3);
    bool trivial = false;
    for (const auto& sig : three) trivial = trivial || parse_signature(sig).size() == 9;
    CHECK(trivial);
  }
}
