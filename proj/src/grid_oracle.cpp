#include "tridiss/grid_oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tridiss::oracle {

namespace {

// Integer triangle in the sheared grid. Up: vertices (x,y), (x+s,y), (x,y+s).
// Down: vertices (x,y), (x-s,y), (x,y-s).
struct Piece {
  bool down = false;
  int x = 0;
  int y = 0;
  int s = 0;

  auto key() const { return std::tuple(down, x, y, s); }
  bool operator<(const Piece& o) const { return key() < o.key(); }
  bool operator==(const Piece& o) const { return key() == o.key(); }
};

struct Grid {
  int side;
  std::vector<std::array<int, 2>> up_cells;    // lower-left corner
  std::vector<std::array<int, 2>> down_cells;  // upper-right corner

  explicit Grid(int L) : side(L) {
    for (int i = 0; i < L; ++i)
      for (int j = 0; i + j < L; ++j) up_cells.push_back({i, j});
    for (int i = 1; i <= L; ++i)
      for (int j = 1; i + j <= L; ++j) down_cells.push_back({i, j});
  }

  int cell_count() const { return static_cast<int>(up_cells.size() + down_cells.size()); }

  std::uint64_t mask(const Piece& p) const {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < up_cells.size(); ++k) {
      const auto [i, j] = up_cells[k];
      const bool inside = p.down ? (i + 1 <= p.x && j + 1 <= p.y && i + j >= p.x + p.y - p.s)
                                 : (i >= p.x && j >= p.y && i + j <= p.x + p.y + p.s - 1);
      if (inside) m |= std::uint64_t{1} << k;
    }
    for (std::size_t k = 0; k < down_cells.size(); ++k) {
      const auto [i, j] = down_cells[k];
      const bool inside = p.down ? (i <= p.x && j <= p.y && i + j - 1 >= p.x + p.y - p.s)
                                 : (i > p.x && j > p.y && i + j <= p.x + p.y + p.s);
      if (inside) m |= std::uint64_t{1} << (up_cells.size() + k);
    }
    return m;
  }
};

std::array<int, 2> map_point(int sym, int L, int x, int y) {
  switch (sym) {
    case 0: return {x, y};
    case 1: return {y, x};
    case 2: return {L - x - y, y};
    case 3: return {x, L - x - y};
    case 4: return {y, L - x - y};
    default: return {L - x - y, x};
  }
}

Piece map_piece(int sym, int L, const Piece& p) {
  std::array<std::array<int, 2>, 3> v;
  if (p.down) {
    v = {{{p.x, p.y}, {p.x - p.s, p.y}, {p.x, p.y - p.s}}};
  } else {
    v = {{{p.x, p.y}, {p.x + p.s, p.y}, {p.x, p.y + p.s}}};
  }
  int lo_x = L, lo_y = L, hi_x = 0, hi_y = 0;
  for (auto& q : v) {
    q = map_point(sym, L, q[0], q[1]);
    lo_x = std::min(lo_x, q[0]);
    lo_y = std::min(lo_y, q[1]);
    hi_x = std::max(hi_x, q[0]);
    hi_y = std::max(hi_y, q[1]);
  }
  const bool up = std::any_of(v.begin(), v.end(), [&](const auto& q) { return q[0] == lo_x && q[1] == lo_y; });
  return up ? Piece{false, lo_x, lo_y, p.s} : Piece{true, hi_x, hi_y, p.s};
}

std::string fraction(int num, int den) {
  const int g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::string serialize(const std::vector<Piece>& pieces, int L) {
  std::string out;
  for (const auto& p : pieces) {
    if (!out.empty()) out += ';';
    out += p.down ? "d " : "u ";
    out += fraction(p.x, L) + " " + fraction(p.y, L) + " " + fraction(p.s, L);
  }
  return out;
}

}  // namespace

std::set<std::string> grid_dissections(int L) {
  if (L < 1 || L > 8) throw std::invalid_argument("grid side must be in 1..8");
  const Grid grid(L);
  const int cells = grid.cell_count();
  const std::uint64_t full = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;

  std::vector<Piece> candidates;
  for (int s = 1; s <= L; ++s) {
    for (int x = 0; x + s <= L; ++x)
      for (int y = 0; x + y + s <= L; ++y) candidates.push_back({false, x, y, s});
    for (int x = s; x <= L; ++x)
      for (int y = s; x + y <= L; ++y) candidates.push_back({true, x, y, s});
  }
  std::vector<std::uint64_t> masks;
  for (const auto& p : candidates) masks.push_back(grid.mask(p));

  std::set<std::vector<Piece>> tilings;
  std::vector<Piece> chosen;
  auto search = [&](auto&& self, std::uint64_t covered) -> void {
    if (covered == full) {
      tilings.insert([&] {
        auto sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        return sorted;
      }());
      return;
    }
    const std::uint64_t first = ~covered & (covered + 1);  // lowest uncovered cell
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if ((masks[k] & first) && !(masks[k] & covered)) {
        chosen.push_back(candidates[k]);
        self(self, covered | masks[k]);
        chosen.pop_back();
      }
    }
  };
  search(search, 0);

  std::set<std::string> out;
  for (const auto& tiling : tilings) {
    if (tiling.size() < 2) continue;
    int g = L;
    for (const auto& p : tiling) g = std::gcd(g, p.s);
    if (g != 1) continue;
    std::vector<Piece> best;
    for (int sym = 0; sym < 6; ++sym) {
      std::vector<Piece> image;
      for (const auto& p : tiling) image.push_back(map_piece(sym, L, p));
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = std::move(image);
    }
    out.insert(serialize(best, L));
  }
  return out;
}

std::set<std::string> grid_dissections_up_to(int max_side) {
  std::set<std::string> out;
  for (int L = 2; L <= max_side; ++L) out.merge(grid_dissections(L));
  return out;
}

}  // namespace tridiss::oracle
