#include "tridiss/planar.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>

namespace tridiss {

namespace {

const char* kind_name(PlanarCodeErrorKind k) {
  switch (k) {
    case PlanarCodeErrorKind::MalformedHeader: return "MalformedHeader";
    case PlanarCodeErrorKind::TruncatedGraph: return "TruncatedGraph";
    case PlanarCodeErrorKind::NeighborOutOfRange: return "NeighborOutOfRange";
    case PlanarCodeErrorKind::NotSimple: return "NotSimple";
    default: return "Unsupported";
  }
}

int position_of(const std::vector<int>& rot, int x) {
  auto it = std::find(rot.begin(), rot.end(), x);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

// Breadth-first numbering from the dart (start -> rotation[start][first])
// walking rotations in direction `dir`. Returns false as soon as the code
// exceeds `best` (when best is nonempty).
bool number_from(const EmbeddedGraph& g, int start, int first, int dir, const std::vector<std::uint8_t>& best,
                 std::vector<std::uint8_t>& code, std::vector<int>& order) {
  const int n = g.vertex_count;
  std::vector<int> number(n, 0);
  std::vector<int> ref(n, -1);
  order.assign(1, start);
  number[start] = 1;
  ref[start] = g.rotation[start][first];
  code.clear();
  bool tied = !best.empty();
  auto emit = [&](std::uint8_t value) {
    if (tied) {
      const std::uint8_t other = best[code.size()];
      if (value > other) return false;
      if (value < other) tied = false;
    }
    code.push_back(value);
    return true;
  };
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int x = order[k];
    const auto& rot = g.rotation[x];
    const int deg = static_cast<int>(rot.size());
    const int p0 = position_of(rot, ref[x]);
    for (int step = 0; step < deg; ++step) {
      const int y = rot[((p0 + dir * step) % deg + deg) % deg];
      if (number[y] == 0) {
        order.push_back(y);
        number[y] = static_cast<int>(order.size());
        ref[y] = x;
      }
      if (!emit(static_cast<std::uint8_t>(number[y]))) return false;
    }
    if (!emit(0)) return false;
  }
  return true;
}

struct Numbering {
  std::vector<std::uint8_t> code;
  int start = -1;
  int first = -1;
  int dir = 1;
};

Numbering best_numbering(const EmbeddedGraph& g) {
  const int n = g.vertex_count;
  if (n > 255) throw std::invalid_argument("canonical_code supports at most 255 vertices");
  std::pair<int, int> key{-1, -1};
  for (int u = 0; u < n; ++u) {
    for (int v : g.rotation[u]) key = std::max(key, {g.degree(u), g.degree(v)});
  }
  Numbering best;
  std::vector<std::uint8_t> code;
  std::vector<int> order;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != key.first) continue;
    for (int i = 0; i < g.degree(u); ++i) {
      if (g.degree(g.rotation[u][i]) != key.second) continue;
      for (int dir : {1, -1}) {
        if (number_from(g, u, i, dir, best.code, code, order) &&
            (best.code.empty() || code < best.code)) {
          best = {code, u, i, dir};
        }
      }
    }
  }
  return best;
}

}  // namespace

int EmbeddedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rotation) twice += r.size();
  return static_cast<int>(twice / 2);
}

int EmbeddedGraph::successor(int v, int from) const {
  const auto& rot = rotation[v];
  const int p = position_of(rot, from);
  if (p < 0) throw std::out_of_range("vertex " + std::to_string(from) + " is not adjacent to " + std::to_string(v));
  return rot[(p + 1) % rot.size()];
}

PlanarCodeError::PlanarCodeError(PlanarCodeErrorKind kind, std::size_t offset, std::size_t record,
                                 const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + " at byte offset " + std::to_string(offset) +
                         " (record " + std::to_string(record) + "): " + what),
      kind_(kind),
      offset_(offset),
      record_(record) {}

std::vector<EmbeddedGraph> parse_planar_code(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  if (!bytes.empty() && bytes[0] == '>') {
    const std::string_view head(reinterpret_cast<const char*>(bytes.data()),
                                std::min(bytes.size(), kPlanarCodeHeader.size()));
    if (head != kPlanarCodeHeader) {
      if (head.starts_with(">>planar_code ")) {
        throw PlanarCodeError(PlanarCodeErrorKind::Unsupported, 0, 0, "only the single-byte format is supported");
      }
      throw PlanarCodeError(PlanarCodeErrorKind::MalformedHeader, 0, 0, "expected '>>planar_code<<'");
    }
    pos = kPlanarCodeHeader.size();
  }

  std::vector<EmbeddedGraph> graphs;
  while (pos < bytes.size()) {
    const std::size_t record = graphs.size();
    const std::size_t record_start = pos;
    const int n = bytes[pos++];
    if (n == 0) {
      throw PlanarCodeError(PlanarCodeErrorKind::Unsupported, record_start, record,
                            "two-byte vertex encoding (leading zero) is not supported");
    }
    EmbeddedGraph g;
    g.vertex_count = n;
    g.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) {
          throw PlanarCodeError(PlanarCodeErrorKind::TruncatedGraph, pos, record,
                                "stream ended inside vertex " + std::to_string(v + 1));
        }
        const int w = bytes[pos++];
        if (w == 0) break;
        if (w > n) {
          throw PlanarCodeError(PlanarCodeErrorKind::NeighborOutOfRange, pos - 1, record,
                                "neighbour " + std::to_string(w) + " exceeds vertex count " + std::to_string(n));
        }
        g.rotation[v].push_back(w - 1);
      }
    }
    if (!is_simple(g)) {
      throw PlanarCodeError(PlanarCodeErrorKind::NotSimple, record_start, record,
                            "loop, repeated edge, or one-sided edge");
    }
    graphs.push_back(std::move(g));
  }
  return graphs;
}

std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_planar_code(bytes);
}

void write_planar_code(std::ostream& out, std::span<const EmbeddedGraph> graphs, bool with_header) {
  if (with_header) out << kPlanarCodeHeader;
  for (const auto& g : graphs) {
    if (g.vertex_count < 1 || g.vertex_count > 254) {
      throw std::invalid_argument("single-byte planar_code needs 1..254 vertices");
    }
    out.put(static_cast<char>(g.vertex_count));
    for (const auto& rot : g.rotation) {
      for (int w : rot) out.put(static_cast<char>(w + 1));
      out.put(0);
    }
  }
}

bool is_simple(const EmbeddedGraph& g) {
  if (static_cast<int>(g.rotation.size()) != g.vertex_count) return false;
  std::set<std::pair<int, int>> darts;
  for (int v = 0; v < g.vertex_count; ++v) {
    for (int w : g.rotation[v]) {
      if (w == v || w < 0 || w >= g.vertex_count) return false;
      if (!darts.emplace(v, w).second) return false;
    }
  }
  for (const auto& [v, w] : darts) {
    if (!darts.contains({w, v})) return false;
  }
  return true;
}

std::vector<Face> faces_from_embedding(const EmbeddedGraph& g) {
  std::map<std::pair<int, int>, bool> used;
  for (int v = 0; v < g.vertex_count; ++v) {
    for (int w : g.rotation[v]) used[{v, w}] = false;
  }
  std::vector<Face> faces;
  for (auto& [dart, seen] : used) {
    if (seen) continue;
    Face f;
    auto [u, v] = dart;
    while (true) {
      auto it = used.find({u, v});
      if (it == used.end()) throw NonSphericalEmbedding("dart without reverse edge");
      if (it->second) break;
      it->second = true;
      f.vertices.push_back(u);
      const int w = g.successor(v, u);
      u = v;
      v = w;
    }
    faces.push_back(std::move(f));
  }
  const int euler = g.vertex_count - g.edge_count() + static_cast<int>(faces.size());
  if (euler != 2) {
    throw NonSphericalEmbedding("V - E + F = " + std::to_string(euler) + ", expected 2");
  }
  return faces;
}

EmbeddedGraph graph_from_faces(int vertex_count, const std::vector<std::array<int, 3>>& faces) {
  std::vector<std::map<int, int>> succ(vertex_count);
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const int u = f[k], v = f[(k + 1) % 3], w = f[(k + 2) % 3];
      if (!succ[v].emplace(u, w).second) throw std::invalid_argument("faces reuse a corner");
    }
  }
  EmbeddedGraph g;
  g.vertex_count = vertex_count;
  g.rotation.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if (succ[v].empty()) continue;
    const int first = succ[v].begin()->first;
    int x = first;
    do {
      g.rotation[v].push_back(x);
      auto it = succ[v].find(x);
      if (it == succ[v].end()) throw std::invalid_argument("faces do not close around a vertex");
      x = it->second;
    } while (x != first && g.rotation[v].size() <= succ[v].size());
    if (g.rotation[v].size() != succ[v].size()) throw std::invalid_argument("vertex link is not a single cycle");
  }
  return g;
}

std::vector<std::uint8_t> canonical_code(const EmbeddedGraph& g) { return best_numbering(g).code; }

EmbeddedGraph canonical_form(const EmbeddedGraph& g) {
  const Numbering best = best_numbering(g);
  EmbeddedGraph out;
  out.vertex_count = g.vertex_count;
  out.rotation.resize(g.vertex_count);
  int v = 0;
  for (std::uint8_t c : best.code) {
    if (c == 0) {
      ++v;
    } else {
      out.rotation[v].push_back(c - 1);
    }
  }
  return out;
}

}  // namespace tridiss
