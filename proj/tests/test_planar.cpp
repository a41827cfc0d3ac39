#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tridiss/generate.hpp"
#include "tridiss/ingest.hpp"
#include "tridiss/planar.hpp"
#include "tridiss/reference.hpp"

using namespace tridiss;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view header, std::initializer_list<int> body) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int b : body) out.push_back(static_cast<std::uint8_t>(b));
  return out;
}

PlanarCodeError parse_error(const std::vector<std::uint8_t>& bytes) {
  try {
    parse_planar_code(bytes);
  } catch (const PlanarCodeError& e) {
    return e;
  }
  FAIL("expected PlanarCodeError");
  return PlanarCodeError(PlanarCodeErrorKind::Unsupported, 0, 0, "unreachable");
}

std::vector<std::uint8_t> encode(std::span<const EmbeddedGraph> graphs) {
  std::ostringstream out;
  write_planar_code(out, graphs);
  const std::string s = out.str();
  return {s.begin(), s.end()};
}

}  // namespace

TEST_SUITE("planar") {
  TEST_CASE("triangle C3 from planar_code") {
    const auto graphs = parse_planar_code(bytes_of(kPlanarCodeHeader, {3, 2, 3, 0, 3, 1, 0, 1, 2, 0}));
    REQUIRE(graphs.size() == 1);
    const EmbeddedGraph& g = graphs[0];
    CHECK(g.vertex_count == 3);
    CHECK(g.rotation[0] == std::vector<int>{1, 2});
    CHECK(g.edge_count() == 3);
    const auto faces = faces_from_embedding(g);
    REQUIRE(faces.size() == 2);
    for (const auto& f : faces) CHECK(f.vertices.size() == 3);
  }

  TEST_CASE("empty streams") {
    CHECK(parse_planar_code(bytes_of(kPlanarCodeHeader, {})).empty());
    CHECK(parse_planar_code(bytes_of("", {})).empty());
  }

  TEST_CASE("headerless records parse") {
    CHECK(parse_planar_code(bytes_of("", {3, 2, 3, 0, 3, 1, 0, 1, 2, 0})).size() == 1);
  }

  TEST_CASE("parse errors carry kind and offset") {
    auto e = parse_error(bytes_of(kPlanarCodeHeader, {3, 2, 3, 0, 3, 1}));
    CHECK(e.kind() == PlanarCodeErrorKind::TruncatedGraph);
    CHECK(e.offset() == kPlanarCodeHeader.size() + 6);
    CHECK(e.record() == 0);

    e = parse_error(bytes_of(kPlanarCodeHeader, {3, 2, 3, 0, 3, 1, 0, 1, 2, 0, 3, 2, 9, 0}));
    CHECK(e.kind() == PlanarCodeErrorKind::NeighborOutOfRange);
    CHECK(e.offset() == kPlanarCodeHeader.size() + 12);
    CHECK(e.record() == 1);

    e = parse_error(bytes_of(kPlanarCodeHeader, {3, 2, 2, 0, 1, 0, 0}));
    CHECK(e.kind() == PlanarCodeErrorKind::NotSimple);

    e = parse_error(bytes_of(">>planar_kode<<", {}));
    CHECK(e.kind() == PlanarCodeErrorKind::MalformedHeader);
    CHECK(e.offset() == 0);

    e = parse_error(bytes_of(">>planar_code le<<", {}));
    CHECK(e.kind() == PlanarCodeErrorKind::Unsupported);

    e = parse_error(bytes_of(kPlanarCodeHeader, {0, 3, 0}));
    CHECK(e.kind() == PlanarCodeErrorKind::Unsupported);
  }

  TEST_CASE("octahedron round trip through planar_code") {
    const EmbeddedGraph oct = octahedron();
    const std::vector<EmbeddedGraph> one{oct};
    const auto graphs = parse_planar_code(encode(one));
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0] == oct);
    CHECK(graphs[0].vertex_count == 6);
    for (int v = 0; v < 6; ++v) CHECK(graphs[0].degree(v) == 4);
    const auto faces = faces_from_embedding(graphs[0]);
    CHECK(faces.size() == 8);
    for (const auto& f : faces) CHECK(f.vertices.size() == 3);
  }

  TEST_CASE("reversing one rotation breaks the spherical embedding") {
    EmbeddedGraph g = octahedron();
    std::reverse(g.rotation[0].begin(), g.rotation[0].end());
    CHECK_THROWS_AS(faces_from_embedding(g), NonSphericalEmbedding);
  }

  TEST_CASE("graph_from_faces inverts face tracing") {
    const EmbeddedGraph oct = octahedron();
    std::vector<std::array<int, 3>> triangles;
    for (const auto& f : faces_from_embedding(oct)) triangles.push_back({f.vertices[0], f.vertices[1], f.vertices[2]});
    CHECK(graph_from_faces(6, triangles) == oct);
  }

  TEST_CASE("canonical code ignores labelling and mirroring") {
    const EmbeddedGraph oct = octahedron();
    EmbeddedGraph relabelled;
    relabelled.vertex_count = 6;
    relabelled.rotation.resize(6);
    const std::array<int, 6> perm{3, 5, 0, 2, 4, 1};
    for (int v = 0; v < 6; ++v) {
      for (int w : oct.rotation[v]) relabelled.rotation[perm[v]].push_back(perm[w]);
    }
    EmbeddedGraph mirrored = oct;
    for (auto& r : mirrored.rotation) std::reverse(r.begin(), r.end());
    CHECK(canonical_code(relabelled) == canonical_code(oct));
    CHECK(canonical_code(mirrored) == canonical_code(oct));
    CHECK(canonical_form(relabelled) == canonical_form(oct));
  }
}

TEST_SUITE("planar") {
  TEST_CASE("octahedron becomes the intercalate") {
    const Bitrade b = triangulation_to_bitrade(octahedron());
    CHECK(b.size() == 4);
    CHECK(isotopic(b, reference::intercalate()));
  }

  TEST_CASE("odd degrees are rejected") {
    // K4: every vertex has degree 3
    const EmbeddedGraph k4 = parse_planar_code(bytes_of(kPlanarCodeHeader, {4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0,
                                                                               1, 3, 2, 0}))[0];
    REQUIRE(faces_from_embedding(k4).size() == 4);
    CHECK_THROWS_AS(triangulation_to_bitrade(k4), NotEulerian);
    CHECK_FALSE(two_color_faces(k4, faces_from_embedding(k4)).has_value());
  }

  TEST_CASE("non-triangular faces are rejected") {
    // 4-cycle: two quadrilateral faces, all degrees 2
    const EmbeddedGraph c4 = parse_planar_code(bytes_of(kPlanarCodeHeader, {4, 2, 4, 0, 3, 1, 0, 4, 2, 0, 1, 3, 0}))[0];
    CHECK_THROWS_AS(triangulation_to_bitrade(c4), NotATriangulation);
  }

  TEST_CASE("brute force generator at the smallest bounds") {
    CHECK(brute_force_eulerian_triangulations(5).empty());
    CHECK(brute_force_eulerian_triangulations(6).size() == 1);
    CHECK(brute_force_eulerian_triangulations(7).size() == 1);
    CHECK_THROWS_AS(brute_force_eulerian_triangulations(13), BoundTooLarge);
  }

  TEST_CASE("plane triangulation counts") {
    const auto levels = plane_triangulations(11);
    const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50, 233, 1249};
    for (int n = 4; n <= 11; ++n) CHECK(levels[n].size() == expected[n - 4]);
  }

  TEST_CASE("Eulerian triangulation counts and agreement with brute force") {
    const auto levels = eulerian_triangulations(16);
    const std::vector<std::size_t> expected{1, 0, 1, 1, 2, 2, 8, 8, 32, 57, 185};
    for (int n = 6; n <= 16; ++n) CHECK(levels[n].size() == expected[n - 6]);

    std::set<std::vector<std::uint8_t>> expanded, brute;
    for (int n = 0; n <= 12; ++n)
      for (const auto& g : levels[n]) expanded.insert(canonical_code(g));
    for (const auto& g : brute_force_eulerian_triangulations(12)) brute.insert(canonical_code(g));
    CHECK(expanded == brute);
  }

  TEST_CASE("faces are 2-colourable exactly when all degrees are even") {
    for (const auto& level : plane_triangulations(10)) {
      for (const auto& g : level) {
        bool even = true;
        for (int v = 0; v < g.vertex_count; ++v) even = even && g.degree(v) % 2 == 0;
        CHECK(two_color_faces(g, faces_from_embedding(g)).has_value() == even);
      }
    }
  }

  TEST_CASE("every generated triangulation gives a spherical separated bitrade of size V - 2") {
    const auto levels = eulerian_triangulations(14);
    for (std::size_t v = 0; v < levels.size(); ++v) {
      for (const auto& g : levels[v]) {
        const Bitrade b = triangulation_to_bitrade(g);
        CHECK(b.size() == static_cast<int>(v) - 2);
        CHECK(genus(b) == 0);
        CHECK(is_separated_bitrade(b));
      }
    }
  }
}
