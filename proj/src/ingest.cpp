#include "tridiss/ingest.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace tridiss {

namespace {

// Face index on the left of every dart.
std::map<std::pair<int, int>, int> dart_faces(const std::vector<Face>& faces) {
  std::map<std::pair<int, int>, int> owner;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& vs = faces[f].vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) owner[{vs[k], vs[(k + 1) % vs.size()]}] = f;
  }
  return owner;
}

}  // namespace

std::optional<std::vector<FaceColor>> two_color_faces(const EmbeddedGraph& g, const std::vector<Face>& faces) {
  (void)g;
  if (faces.empty()) return std::vector<FaceColor>{};
  const auto owner = dart_faces(faces);
  std::vector<int> color(faces.size(), -1);
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      const auto& vs = faces[f].vertices;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        const int across = owner.at({vs[(k + 1) % vs.size()], vs[k]});
        if (color[across] < 0) {
          color[across] = 1 - color[f];
          stack.push_back(across);
        } else if (color[across] == color[f]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<FaceColor> out;
  out.reserve(faces.size());
  for (int c : color) out.push_back(c == 0 ? FaceColor::White : FaceColor::Black);
  return out;
}

Bitrade triangulation_to_bitrade(const EmbeddedGraph& g) {
  if (!is_simple(g)) throw NotATriangulation("graph is not simple");
  if (g.vertex_count < 4) throw NotATriangulation("fewer than four vertices");
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.degree(v) % 2 != 0) {
      throw NotEulerian("vertex " + std::to_string(v + 1) + " has odd degree " + std::to_string(g.degree(v)));
    }
  }
  std::vector<Face> faces = faces_from_embedding(g);
  for (const Face& f : faces) {
    if (f.vertices.size() != 3) throw NotATriangulation("face of length " + std::to_string(f.vertices.size()));
  }
  const auto colors = two_color_faces(g, faces);
  if (!colors) throw Uncolorable("faces admit no proper 2-colouring");
  for (std::size_t f = 0; f < faces.size(); ++f) faces[f].color = (*colors)[f];

  // Vertex 3-colouring, propagated across edges from the first face.
  const auto owner = dart_faces(faces);
  std::vector<int> vcolor(g.vertex_count, -1);
  std::vector<bool> visited(faces.size(), false);
  for (int k = 0; k < 3; ++k) vcolor[faces[0].vertices[k]] = k;
  std::vector<int> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    const auto& vs = faces[f].vertices;
    for (int k = 0; k < 3; ++k) {
      const int u = vs[k], v = vs[(k + 1) % 3];
      const int across = owner.at({v, u});
      const auto& ws = faces[across].vertices;
      const int w = *std::find_if(ws.begin(), ws.end(), [&](int x) { return x != u && x != v; });
      const int expected = 3 - vcolor[u] - vcolor[v];
      if (vcolor[w] < 0) {
        vcolor[w] = expected;
      } else if (vcolor[w] != expected) {
        throw Uncolorable("vertex " + std::to_string(w + 1) + " needs two colours");
      }
      if (!visited[across]) {
        visited[across] = true;
        stack.push_back(across);
      }
    }
  }
  if (std::count(vcolor.begin(), vcolor.end(), -1) != 0) throw NotATriangulation("graph is disconnected");

  // Roles by ascending least vertex id of each colour class; labels by vertex id rank.
  std::array<int, 3> least{g.vertex_count, g.vertex_count, g.vertex_count};
  for (int v = 0; v < g.vertex_count; ++v) least[vcolor[v]] = std::min(least[vcolor[v]], v);
  std::array<int, 3> role_of_color{};
  {
    std::array<int, 3> by_least{0, 1, 2};
    std::sort(by_least.begin(), by_least.end(), [&](int a, int b) { return least[a] < least[b]; });
    for (int r = 0; r < 3; ++r) role_of_color[by_least[r]] = r;
  }
  std::vector<int> label(g.vertex_count);
  std::array<int, 3> next{0, 0, 0};
  for (int v = 0; v < g.vertex_count; ++v) label[v] = next[role_of_color[vcolor[v]]]++;

  std::vector<Triple> star, delta;
  for (const Face& f : faces) {
    Triple t;
    for (int v : f.vertices) t[role_of_color[vcolor[v]]] = label[v];
    (f.color == FaceColor::White ? star : delta).push_back(t);
  }
  Bitrade b = Bitrade::validate(std::move(star), std::move(delta));
  if (!is_separated_bitrade(b) || genus(b) != 0) {
    throw std::logic_error("Eulerian triangulation produced a non-separated or non-spherical bitrade");
  }
  return b;
}

}  // namespace tridiss
