#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tridiss/enumerate.hpp"

namespace tridiss::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// R1-R3 on the reference bitrades and on every bitrade of the internal
// generator up to `max_vertices`; genus and separation of the latter.
std::vector<CheckResult> axioms(int max_vertices = 12);

// Exact regression values, inconsistent systems, and every (bitrade, order,
// anchor) up to `max_size`: valid dissection and the integer side and area
// relations.
std::vector<CheckResult> solver(int max_size = 9);

// Signature invariance under the six symmetries and the round trip
// dissection -> pointed bitrade -> dissection for separated dissections.
std::vector<CheckResult> geometry(int max_size = 9);

// Pipeline dissections with least scale <= max_side against the grid
// enumerator. A dissection of scale L has at most L^2 pieces, so the
// pipeline runs to max size max_side^2.
std::vector<CheckResult> oracle(int max_side = 4);

// Pipeline signatures (any size) of least integer scale <= max_side.
std::vector<std::string> pipeline_signatures_up_to_scale(const DissectionStore& store, int max_side);

std::vector<CheckResult> store(const std::filesystem::path& dir);

}  // namespace tridiss::checks
