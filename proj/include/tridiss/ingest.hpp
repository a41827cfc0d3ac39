#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tridiss/bitrade.hpp"
#include "tridiss/planar.hpp"

namespace tridiss {

class NotEulerian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotATriangulation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class Uncolorable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Proper 2-colouring of the faces (edge-adjacent faces differ), the first
// face white. Empty when none exists.
std::optional<std::vector<FaceColor>> two_color_faces(const EmbeddedGraph& g, const std::vector<Face>& faces);

// Planar Eulerian triangulation -> separated spherical bitrade. White faces
// become T*, black faces T^; the vertex colour classes, ordered by their least
// vertex id, become rows, columns and symbols.
Bitrade triangulation_to_bitrade(const EmbeddedGraph& g);

}  // namespace tridiss
