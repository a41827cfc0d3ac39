#pragma once

#include <stdexcept>
#include <vector>

#include "tridiss/planar.hpp"

namespace tridiss {

class BoundTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All simple plane triangulations with 4..max_vertices vertices, up to
// isomorphism (mirror images identified), grown from K4 by vertex splitting.
// Index i of the result holds the graphs with i vertices.
std::vector<std::vector<EmbeddedGraph>> plane_triangulations(int max_vertices);

// Exhaustive oracle: plane_triangulations filtered to even degrees.
// Throws BoundTooLarge above 12 vertices.
std::vector<EmbeddedGraph> brute_force_eulerian_triangulations(int max_vertices);

// Eulerian triangulations grown from the octahedron by two expansions:
// splitting a vertex across a new degree-4 vertex, and inserting an
// octahedral triangle into a face. Index i holds the graphs with i vertices,
// canonically labelled and sorted by canonical code.
std::vector<std::vector<EmbeddedGraph>> eulerian_triangulations(int max_vertices);

EmbeddedGraph octahedron();

}  // namespace tridiss
