#pragma once

#include <string>

#include "tridiss/solver.hpp"

namespace tridiss {

// Equilateral drawings of a dissection. Coordinates are decimals with 12
// significant digits. Up triangles get a solid outline, down triangles a
// dashed one.
std::string render_svg(const Dissection& d, double width = 480);
std::string render_tikz(const Dissection& d);

}  // namespace tridiss
