#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridiss {

// Plane graph given by a rotation system. Vertex ids are 0-based in memory;
// planar_code files use 1-based ids.
struct EmbeddedGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> rotation;

  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  int edge_count() const;
  // Neighbour following `from` in the rotation at v.
  int successor(int v, int from) const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;
};

enum class PlanarCodeErrorKind { MalformedHeader, TruncatedGraph, NeighborOutOfRange, NotSimple, Unsupported };

class PlanarCodeError : public std::runtime_error {
 public:
  PlanarCodeError(PlanarCodeErrorKind kind, std::size_t offset, std::size_t record, const std::string& what);

  PlanarCodeErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }
  std::size_t record() const { return record_; }

 private:
  PlanarCodeErrorKind kind_;
  std::size_t offset_;
  std::size_t record_;
};

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// Single-byte planar_code: optional header, then per graph one byte n followed
// by each vertex's neighbours in rotation order, each list closed by a 0 byte.
std::vector<EmbeddedGraph> parse_planar_code(std::span<const std::uint8_t> bytes);
std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path);
void write_planar_code(std::ostream& out, std::span<const EmbeddedGraph> graphs, bool with_header = true);

enum class FaceColor { White, Black };

struct Face {
  std::vector<int> vertices;  // traced order
  FaceColor color = FaceColor::White;
};

class NonSphericalEmbedding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Traces faces with the rule (u -> v) is followed by (v -> successor(v, u)).
// Every dart lies on exactly one face. Throws NonSphericalEmbedding unless
// V - E + F = 2.
std::vector<Face> faces_from_embedding(const EmbeddedGraph& g);

// Rebuilds the rotation system from oriented triangular faces traced with the
// same rule as faces_from_embedding.
EmbeddedGraph graph_from_faces(int vertex_count, const std::vector<std::array<int, 3>>& faces);

// No loops, no repeated neighbours, and every edge present at both ends.
bool is_simple(const EmbeddedGraph& g);

// Isomorphism-invariant code of a connected plane graph (mirror images
// coincide). Equal codes iff the embedded graphs are isomorphic.
std::vector<std::uint8_t> canonical_code(const EmbeddedGraph& g);
// The graph relabelled into the numbering that produced canonical_code.
EmbeddedGraph canonical_form(const EmbeddedGraph& g);

}  // namespace tridiss
