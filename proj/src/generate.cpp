#include "tridiss/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace tridiss {

namespace {

using FaceList = std::vector<std::array<int, 3>>;

FaceList face_list(const EmbeddedGraph& g) {
  FaceList out;
  for (const Face& f : faces_from_embedding(g)) out.push_back({f.vertices[0], f.vertices[1], f.vertices[2]});
  return out;
}


// Splits x into x and a new vertex y: x keeps the corners between rotation
// positions i..j, y takes the rest. When `hub` is set the new edge x-y is
// subdivided by a further vertex adjacent to both ends and to n_i, n_j.
EmbeddedGraph split_vertex(const EmbeddedGraph& g, const FaceList& faces, int x, int i, int j, bool hub) {
  const auto& rot = g.rotation[x];
  const int y = g.vertex_count;
  const int v = y + 1;
  std::set<int> kept;  // corner t sits between rot[t] and rot[t+1]
  for (int t = i; t < j; ++t) kept.insert(rot[t]);

  FaceList out;
  out.reserve(faces.size() + 4);
  for (auto f : faces) {
    const auto it = std::find(f.begin(), f.end(), x);
    if (it != f.end()) {
      const int pos = static_cast<int>(it - f.begin());
      const int before = f[(pos + 2) % 3];  // face traced before -> x -> after
      if (!kept.contains(before)) *it = y;
    }
    out.push_back(f);
  }
  const int ni = rot[i], nj = rot[j];
  if (hub) {
    out.push_back({nj, x, v});
    out.push_back({nj, v, y});
    out.push_back({v, x, ni});
    out.push_back({y, v, ni});
  } else {
    out.push_back({nj, x, y});
    out.push_back({y, x, ni});
  }
  return graph_from_faces(g.vertex_count + (hub ? 2 : 1), out);
}

EmbeddedGraph insert_octahedral_triangle(const EmbeddedGraph& g, const FaceList& faces, std::size_t face) {
  const auto [a, b, c] = faces[face];
  const int x = g.vertex_count, y = x + 1, z = x + 2;
  FaceList out;
  out.reserve(faces.size() + 6);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (f != face) out.push_back(faces[f]);
  }
  for (const auto& f : FaceList{{a, b, z}, {b, c, x}, {c, a, y}, {a, z, y}, {b, x, z}, {c, y, x}, {x, y, z}}) {
    out.push_back(f);
  }
  return graph_from_faces(g.vertex_count + 3, out);
}

struct Level {
  std::map<std::vector<std::uint8_t>, EmbeddedGraph> graphs;

  void add(const EmbeddedGraph& g) {
    auto code = canonical_code(g);
    if (!graphs.contains(code)) graphs.emplace(std::move(code), canonical_form(g));
  }
  std::vector<EmbeddedGraph> sorted() const {
    std::vector<EmbeddedGraph> out;
    for (const auto& [code, g] : graphs) out.push_back(g);
    return out;
  }
};

EmbeddedGraph k4() { return graph_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }


}  // namespace

EmbeddedGraph octahedron() {
  return graph_from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

std::vector<std::vector<EmbeddedGraph>> plane_triangulations(int max_vertices) {
  std::vector<std::vector<EmbeddedGraph>> levels(std::max(max_vertices + 1, 0));
  if (max_vertices < 4) return levels;
  levels[4] = {canonical_form(k4())};
  for (int n = 4; n < max_vertices; ++n) {
    Level next;
    for (const auto& g : levels[n]) {
      const FaceList faces = face_list(g);
      for (int x = 0; x < n; ++x) {
        const int k = g.degree(x);
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j) next.add(split_vertex(g, faces, x, i, j, false));
        }
      }
    }
    levels[n + 1] = next.sorted();
  }
  return levels;
}

std::vector<EmbeddedGraph> brute_force_eulerian_triangulations(int max_vertices) {
  if (max_vertices > 12) {
    throw BoundTooLarge("brute-force triangulation search is limited to 12 vertices, got " +
                        std::to_string(max_vertices));
  }
  std::vector<EmbeddedGraph> out;
  for (const auto& level : plane_triangulations(max_vertices)) {
    for (const auto& g : level) {
      bool even = true;
      for (int v = 0; v < g.vertex_count; ++v) even = even && g.degree(v) % 2 == 0;
      if (even) out.push_back(g);
    }
  }
  return out;
}

std::vector<std::vector<EmbeddedGraph>> eulerian_triangulations(int max_vertices) {
  if (max_vertices > 254) throw BoundTooLarge("planar_code output is limited to 254 vertices");
  std::vector<Level> levels(std::max(max_vertices + 1, 0));
  if (max_vertices >= 6) levels[6].add(octahedron());
  for (int n = 6; n <= max_vertices; ++n) {
    for (const auto& [code, g] : levels[n].graphs) {
      const FaceList faces = face_list(g);
      if (n + 2 <= max_vertices) {
        for (int x = 0; x < n; ++x) {
          const int k = g.degree(x);
          for (int i = 0; i < k; ++i) {
            for (int j = i + 2; j <= i + k - 2 && j < k; j += 2) {
              levels[n + 2].add(split_vertex(g, faces, x, i, j, true));
            }
          }
        }
      }
      if (n + 3 <= max_vertices) {
        for (std::size_t f = 0; f < faces.size(); ++f) levels[n + 3].add(insert_octahedral_triangle(g, faces, f));
      }
    }
  }
  std::vector<std::vector<EmbeddedGraph>> out;
  for (const auto& level : levels) out.push_back(level.sorted());
  return out;
}

}  // namespace tridiss
