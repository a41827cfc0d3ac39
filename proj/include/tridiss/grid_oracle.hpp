#pragma once

#include <set>
#include <string>

namespace tridiss::oracle {

// Every dissection of the side-L triangular grid into grid-aligned
// equilateral triangles, found by exact cover over the L^2 unit cells.
// Tilings are reduced under the six symmetries of the outer triangle and
// serialized in the canonical signature text format (coordinates divided
// by L). Only tilings with more than one piece whose sides have gcd 1
// with L are kept, i.e. those whose least integer scale is exactly L.
std::set<std::string> grid_dissections(int side);

// Union over 2 <= L <= max_side.
std::set<std::string> grid_dissections_up_to(int max_side);

}  // namespace tridiss::oracle
