#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tridiss/bitrade.hpp"
#include "tridiss/solver.hpp"

namespace tridiss {

// The six affine maps of Sigma onto itself, in sheared coordinates.
enum class Symmetry : std::uint8_t {
  Identity,    // (x, y)
  SwapXY,      // (y, x)
  FlipX,       // (1-x-y, y)
  FlipY,       // (x, 1-x-y)
  RotateLeft,  // (y, 1-x-y)
  RotateRight  // (1-x-y, x)
};

inline constexpr std::array<Symmetry, 6> kSymmetries{Symmetry::Identity, Symmetry::SwapXY,     Symmetry::FlipX,
                                                     Symmetry::FlipY,    Symmetry::RotateLeft, Symmetry::RotateRight};

Point apply(Symmetry s, const Point& p);
Triangle apply(Symmetry s, const Triangle& t);
Dissection apply(Symmetry s, const Dissection& d);

// Canonical text of a dissection: the least, over the six symmetry images, of
// the sorted triangle list, written as "u|d x y side" entries joined by ';'.
struct Signature {
  std::string text;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string serialize_triangles(const std::vector<Triangle>& sorted_triangles);
Signature canonical_signature(const Dissection& d);
// Inverse of serialize_triangles; throws std::invalid_argument.
Dissection parse_signature(std::string_view text);

// Vertex-list variant: least sorted vertex list over the six images. Kept for
// cross-checking counts against the triangle-list signature.
std::string vertex_list_signature(const Dissection& d);

// Number of symmetries fixing the triangle set (1, 2, 3 or 6).
int automorphism_order(const Dissection& d);

// Number of triangles having each point as a corner.
std::map<Point, int> vertex_degrees(const Dissection& d);

// No dissecting line carries two or more separate runs of triangle sides, and
// no vertex is a corner of six triangles.
bool classify_separated(const Dissection& d);

struct PointedBitrade {
  Bitrade bitrade;
  Triple anchor;  // the lines y = 0, x = 0, x + y = 1
};

// Lines become labels, one per contiguous run of sides; at every degree-6
// vertex the column and symbol runs are cut and the parts below get fresh
// labels, the row run is kept.
PointedBitrade recover_pointed_bitrade(const Dissection& d);
Bitrade recover_bitrade(const Dissection& d);

bool is_perfect(const IntegerDissection& d);
bool is_trivial(const IntegerDissection& d);
std::pair<std::int64_t, std::int64_t> max_min_sides(const IntegerDissection& d);

}  // namespace tridiss
