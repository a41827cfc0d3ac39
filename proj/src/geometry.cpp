#include "tridiss/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tridiss {

Point apply(Symmetry s, const Point& p) {
  switch (s) {
    case Symmetry::Identity: return p;
    case Symmetry::SwapXY: return {p.y, p.x};
    case Symmetry::FlipX: return {1 - p.x - p.y, p.y};
    case Symmetry::FlipY: return {p.x, 1 - p.x - p.y};
    case Symmetry::RotateLeft: return {p.y, 1 - p.x - p.y};
    default: return {1 - p.x - p.y, p.x};
  }
}

Triangle apply(Symmetry s, const Triangle& t) {
  const auto vs = t.vertices();
  std::array<Point, 3> image{apply(s, vs[0]), apply(s, vs[1]), apply(s, vs[2])};
  Rational min_x = image[0].x, max_x = image[0].x, min_y = image[0].y, max_y = image[0].y;
  for (const auto& p : image) {
    if (p.x < min_x) min_x = p.x;
    if (p.x > max_x) max_x = p.x;
    if (p.y < min_y) min_y = p.y;
    if (p.y > max_y) max_y = p.y;
  }
  Triangle out;
  out.source = t.source;
  out.side = max_x - min_x;
  const Point lower_left{min_x, min_y};
  if (std::find(image.begin(), image.end(), lower_left) != image.end()) {
    out.orientation = Orientation::Up;
    out.corner = lower_left;
  } else {
    out.orientation = Orientation::Down;
    out.corner = {max_x, max_y};
  }
  return out;
}

Dissection apply(Symmetry s, const Dissection& d) {
  Dissection out;
  out.triangles.reserve(d.triangles.size());
  for (const auto& t : d.triangles) out.triangles.push_back(apply(s, t));
  return out;
}

namespace {

bool triangle_less(const Triangle& a, const Triangle& b) { return compare_triangles(a, b) < 0; }

std::vector<Triangle> sorted_image(Symmetry s, const Dissection& d) {
  std::vector<Triangle> ts = apply(s, d).triangles;
  std::sort(ts.begin(), ts.end(), triangle_less);
  return ts;
}

bool same_triangles(const std::vector<Triangle>& a, const std::vector<Triangle>& b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](const Triangle& x, const Triangle& y) {
           return compare_triangles(x, y) == 0;
         });
}

}  // namespace

std::string serialize_triangles(const std::vector<Triangle>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ';';
    out += ts[i].orientation == Orientation::Up ? "u " : "d ";
    out += to_string(ts[i].corner.x);
    out += ' ';
    out += to_string(ts[i].corner.y);
    out += ' ';
    out += to_string(ts[i].side);
  }
  return out;
}

Signature canonical_signature(const Dissection& d) {
  std::vector<Triangle> best;
  for (Symmetry s : kSymmetries) {
    auto image = sorted_image(s, d);
    if (best.empty() || std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end(),
                                                     triangle_less)) {
      best = std::move(image);
    }
  }
  return {serialize_triangles(best)};
}

Dissection parse_signature(std::string_view text) {
  Dissection d;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::istringstream entry{std::string(text.substr(start, end - start))};
    std::string kind, x, y, side, extra;
    if (!(entry >> kind >> x >> y >> side) || (entry >> extra) || (kind != "u" && kind != "d")) {
      throw std::invalid_argument("malformed triangle entry '" + std::string(text.substr(start, end - start)) + "'");
    }
    Triangle t;
    t.orientation = kind == "u" ? Orientation::Up : Orientation::Down;
    t.corner = {parse_rational(x), parse_rational(y)};
    t.side = parse_rational(side);
    d.triangles.push_back(std::move(t));
    start = end + 1;
  }
  return d;
}

std::string vertex_list_signature(const Dissection& d) {
  std::vector<Point> best;
  for (Symmetry s : kSymmetries) {
    std::vector<Point> image = apply(s, d).vertex_set();
    if (best.empty() || image < best) best = std::move(image);
  }
  std::string out;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out += ';';
    out += to_string(best[i].x) + " " + to_string(best[i].y);
  }
  return out;
}

int automorphism_order(const Dissection& d) {
  const auto base = sorted_image(Symmetry::Identity, d);
  int count = 0;
  for (Symmetry s : kSymmetries) count += same_triangles(sorted_image(s, d), base) ? 1 : 0;
  return count;
}

std::map<Point, int> vertex_degrees(const Dissection& d) {
  std::map<Point, int> deg;
  for (const auto& t : d.triangles) {
    for (auto& p : t.vertices()) ++deg[std::move(p)];
  }
  return deg;
}

namespace {

// Direction 0: horizontal y = c (parameter x); 1: vertical x = c (parameter y);
// 2: diagonal x + y = c (parameter x).
struct LineKey {
  int direction;
  Rational constant;
  friend bool operator<(const LineKey& a, const LineKey& b) {
    if (a.direction != b.direction) return a.direction < b.direction;
    return a.constant < b.constant;
  }
};

struct Interval {
  Rational lo, hi;
};

struct SideRef {
  LineKey line;
  Interval span;
};

std::array<SideRef, 3> sides_of(const Triangle& t) {
  const Rational& x = t.corner.x;
  const Rational& y = t.corner.y;
  const Rational& s = t.side;
  if (t.orientation == Orientation::Up) {
    return {SideRef{{0, y}, {x, x + s}}, SideRef{{1, x}, {y, y + s}}, SideRef{{2, x + y + s}, {x, x + s}}};
  }
  return {SideRef{{0, y}, {x - s, x}}, SideRef{{1, x}, {y - s, y}}, SideRef{{2, x + y - s}, {x - s, x}}};
}

// Merged runs (touching intervals join) per dissecting line.
std::map<LineKey, std::vector<Interval>> line_runs(const Dissection& d) {
  std::map<LineKey, std::vector<Interval>> raw;
  for (const auto& t : d.triangles) {
    for (auto& side : sides_of(t)) raw[side.line].push_back(side.span);
  }
  std::map<LineKey, std::vector<Interval>> runs;
  for (auto& [line, spans] : raw) {
    std::sort(spans.begin(), spans.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    auto& merged = runs[line];
    for (const auto& span : spans) {
      if (!merged.empty() && span.lo <= merged.back().hi) {
        if (span.hi > merged.back().hi) merged.back().hi = span.hi;
      } else {
        merged.push_back(span);
      }
    }
  }
  return runs;
}

Rational parameter(int direction, const Point& p) { return direction == 1 ? p.y : p.x; }

LineKey line_through(int direction, const Point& p) {
  switch (direction) {
    case 0: return {0, p.y};
    case 1: return {1, p.x};
    default: return {2, p.x + p.y};
  }
}

}  // namespace

bool classify_separated(const Dissection& d) {
  for (const auto& [line, runs] : line_runs(d)) {
    if (runs.size() >= 2) return false;
  }
  for (const auto& [p, deg] : vertex_degrees(d)) {
    if (deg == 6) return false;
  }
  return true;
}

PointedBitrade recover_pointed_bitrade(const Dissection& d) {
  const auto degrees = vertex_degrees(d);
  auto runs = line_runs(d);

  // Cut column and symbol runs at degree-6 vertices.
  for (const auto& [p, deg] : degrees) {
    if (deg != 6) continue;
    for (int dir : {1, 2}) {
      auto& pieces = runs.at(line_through(dir, p));
      const Rational at = parameter(dir, p);
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (pieces[k].lo < at && at < pieces[k].hi) {
          Interval upper{at, pieces[k].hi};
          pieces[k].hi = at;
          pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(k) + 1, upper);
          break;
        }
      }
    }
  }

  std::map<LineKey, int> first_label;
  std::array<int, 3> next{0, 0, 0};
  for (const auto& [line, pieces] : runs) {
    first_label[line] = next[line.direction];
    next[line.direction] += static_cast<int>(pieces.size());
  }
  // Label of the piece on `line` covering [lo, hi].
  auto label_of = [&](const LineKey& line, const Rational& lo, const Rational& hi) {
    const auto& pieces = runs.at(line);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (pieces[k].lo <= lo && hi <= pieces[k].hi) return first_label.at(line) + static_cast<int>(k);
    }
    throw std::logic_error("no dissecting run covers a triangle side");
  };

  std::vector<Triple> delta;
  for (const auto& t : d.triangles) {
    Triple c;
    for (const auto& side : sides_of(t)) c[side.line.direction] = label_of(side.line, side.span.lo, side.span.hi);
    delta.push_back(c);
  }

  const Point corners[3] = {{0, 0}, {1, 0}, {0, 1}};
  std::vector<Triple> star;
  Triple anchor{label_of({0, 0}, 0, 0), label_of({1, 0}, 0, 0), label_of({2, 1}, 0, 0)};
  star.push_back(anchor);
  for (const auto& [p, deg] : degrees) {
    if (std::find(std::begin(corners), std::end(corners), p) != std::end(corners)) continue;
    const LineKey row = line_through(0, p), col = line_through(1, p), sym = line_through(2, p);
    if (deg == 6) {
      // Column pieces are ordered by y, symbol pieces by x: "above" is [.., p] for
      // the column and [p, ..] for the symbol.
      const int r = label_of(row, p.x, p.x);
      const Rational py = p.y, px = p.x;
      int col_above = -1, col_below = -1, sym_above = -1, sym_below = -1;
      const auto& cps = runs.at(col);
      for (std::size_t k = 0; k < cps.size(); ++k) {
        if (cps[k].lo == py) col_above = first_label.at(col) + static_cast<int>(k);
        if (cps[k].hi == py) col_below = first_label.at(col) + static_cast<int>(k);
      }
      const auto& sps = runs.at(sym);
      for (std::size_t k = 0; k < sps.size(); ++k) {
        if (sps[k].hi == px) sym_above = first_label.at(sym) + static_cast<int>(k);
        if (sps[k].lo == px) sym_below = first_label.at(sym) + static_cast<int>(k);
      }
      star.push_back({r, col_above, sym_above});
      star.push_back({r, col_below, sym_below});
    } else {
      star.push_back({label_of(row, p.x, p.x), label_of(col, p.y, p.y), label_of(sym, p.x, p.x)});
    }
  }
  return {Bitrade::validate(std::move(star), std::move(delta)), anchor};
}

Bitrade recover_bitrade(const Dissection& d) { return recover_pointed_bitrade(d).bitrade; }

bool is_perfect(const IntegerDissection& d) {
  for (const auto* counts : {&d.up_counts, &d.down_counts}) {
    for (const auto& [side, n] : *counts) {
      if (n > 1) return false;
    }
  }
  return true;
}

bool is_trivial(const IntegerDissection& d) {
  return std::all_of(d.triangles.begin(), d.triangles.end(),
                     [&](const IntegerTriangle& t) { return t.side == d.triangles.front().side; });
}

std::pair<std::int64_t, std::int64_t> max_min_sides(const IntegerDissection& d) {
  if (d.triangles.empty()) return {0, 0};
  std::int64_t hi = d.triangles.front().side, lo = hi;
  for (const auto& t : d.triangles) {
    hi = std::max(hi, t.side);
    lo = std::min(lo, t.side);
  }
  return {hi, lo};
}

}  // namespace tridiss
