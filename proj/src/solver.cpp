#include "tridiss/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tridiss {

namespace {

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = compare(a.x, b.x); c != 0) return c;
  return compare(a.y, b.y);
}

int LinearSystem::variable(int coord, int label) const {
  const auto& ls = labels[coord];
  auto it = std::lower_bound(ls.begin(), ls.end(), label);
  if (it == ls.end() || *it != label) {
    throw std::out_of_range("label " + std::to_string(label) + " is not a variable of coordinate " +
                            std::to_string(coord));
  }
  int offset = 0;
  for (int k = 0; k < coord; ++k) offset += static_cast<int>(labels[k].size());
  return offset + static_cast<int>(it - ls.begin());
}

LinearSystem build_equations(const Bitrade& b, const Triple& anchor) {
  if (b.star_index(anchor) < 0) throw AnchorNotInTStar("anchor " + to_string(anchor) + " is not in T*");
  LinearSystem sys;
  sys.anchor = anchor;
  for (int k = 0; k < 3; ++k) sys.labels[k] = b.labels(k);
  sys.equations.push_back({{{sys.variable(0, anchor.row), 1}}, 0});
  sys.equations.push_back({{{sys.variable(1, anchor.col), 1}}, 0});
  sys.equations.push_back({{{sys.variable(2, anchor.sym), 1}}, 1});
  for (const Triple& t : b.t_star()) {
    if (t == anchor) continue;
    sys.equations.push_back({{{sys.variable(0, t.row), 1}, {sys.variable(1, t.col), 1}, {sys.variable(2, t.sym), -1}}, 0});
  }
  return sys;
}

bool PointedSolution::is_separated() const {
  for (const auto& role : values) {
    std::set<Rational> seen;
    for (const auto& [label, v] : role) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

PointedSolution solve_exact(const LinearSystem& sys) {
  const int n = sys.variable_count();
  const int m = static_cast<int>(sys.equations.size());
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n + 1, 0));
  for (int i = 0; i < m; ++i) {
    for (const auto& term : sys.equations[i].terms) a[i][term.variable] += term.coefficient;
    a[i][n] = sys.equations[i].constant;
  }

  // Bareiss: every entry stays an integer minor, so each division is exact.
  BigInt previous = 1;
  std::vector<int> pivot_cols;
  int rank = 0;
  BigInt scratch;
  for (int c = 0; c < n && rank < m; ++c) {
    int p = rank;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    for (int i = rank + 1; i < m; ++i) {
      for (int j = c + 1; j <= n; ++j) {
        scratch = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[rank][c];
    pivot_cols.push_back(c);
    ++rank;
  }
  for (int i = rank; i < m; ++i) {
    if (a[i][n] != 0) throw InconsistentSystem("equation system has no solution (rank " + std::to_string(rank) + ")");
  }
  if (rank < n) {
    throw UnderdeterminedSystem("rank " + std::to_string(rank) + " below " + std::to_string(n) + " unknowns");
  }

  std::vector<Rational> x(n);
  for (int i = rank - 1; i >= 0; --i) {
    const int c = pivot_cols[i];
    Rational acc(a[i][n]);
    for (int j = c + 1; j < n; ++j) {
      if (a[i][j] != 0) acc -= Rational(a[i][j]) * x[j];
    }
    x[c] = acc / Rational(a[i][c]);
    x[c].canonicalize();
  }

  PointedSolution sol;
  sol.anchor = sys.anchor;
  int v = 0;
  for (int k = 0; k < 3; ++k) {
    for (int label : sys.labels[k]) sol.values[k].emplace(label, x[v++]);
  }
  return sol;
}

std::array<Point, 3> Triangle::vertices() const {
  if (orientation == Orientation::Up) {
    return {corner, Point{corner.x + side, corner.y}, Point{corner.x, corner.y + side}};
  }
  return {corner, Point{corner.x - side, corner.y}, Point{corner.x, corner.y - side}};
}

std::strong_ordering compare_triangles(const Triangle& a, const Triangle& b) {
  if (a.orientation != b.orientation) {
    return a.orientation == Orientation::Up ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.corner <=> b.corner; c != 0) return c;
  return compare(a.side, b.side);
}

std::vector<Point> Dissection::vertex_set() const {
  std::vector<Point> pts;
  for (const auto& t : triangles) {
    for (auto& p : t.vertices()) pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

// Open region {lo < x < hi, lo < y < hi, lo < x + y < hi}.
struct Region {
  Rational xlo, xhi, ylo, yhi, slo, shi;
};

Region region_of(const Triangle& t) {
  const Rational& x = t.corner.x;
  const Rational& y = t.corner.y;
  if (t.orientation == Orientation::Up) return {x, x + t.side, y, y + t.side, x + y, x + y + t.side};
  return {x - t.side, x, y - t.side, y, x + y - t.side, x + y};
}

}  // namespace

bool triangles_overlap(const Triangle& a, const Triangle& b) {
  const Region ra = region_of(a), rb = region_of(b);
  const Rational xlo = std::max(ra.xlo, rb.xlo), xhi = std::min(ra.xhi, rb.xhi);
  const Rational ylo = std::max(ra.ylo, rb.ylo), yhi = std::min(ra.yhi, rb.yhi);
  const Rational slo = std::max(ra.slo, rb.slo), shi = std::min(ra.shi, rb.shi);
  return xlo < xhi && ylo < yhi && slo < shi && xlo + ylo < shi && xhi + yhi > slo;
}

void validate_dissection(const Dissection& d, bool pairwise_checks) {
  Rational twice_area = 0;
  for (const auto& t : d.triangles) {
    if (t.side <= 0) throw ValidationFailure("area: nonpositive side");
    twice_area += t.side * t.side;
    for (const auto& p : t.vertices()) {
      if (p.x < 0 || p.y < 0 || p.x + p.y > 1) throw ValidationFailure("out-of-bounds: vertex outside Sigma");
    }
  }
  if (twice_area != 1) throw ValidationFailure("area: triangle areas do not sum to 1/2");
  if (pairwise_checks) {
    for (std::size_t i = 0; i < d.triangles.size(); ++i) {
      for (std::size_t j = i + 1; j < d.triangles.size(); ++j) {
        if (triangles_overlap(d.triangles[i], d.triangles[j])) throw ValidationFailure("overlap: interiors intersect");
      }
    }
  }
}

Dissection dissection_from_solution(const Bitrade& b, const PointedSolution& sol, const DissectionOptions& options) {
  Dissection d;
  for (const Triple& c : b.t_delta()) {
    const Rational& r = sol.value(0, c.row);
    const Rational& col = sol.value(1, c.col);
    const Rational& s = sol.value(2, c.sym);
    Rational t = s - r - col;
    if (t == 0) continue;  // the three lines meet in a point
    Triangle tri;
    tri.corner = {col, r};
    tri.source = c;
    if (t > 0) {
      tri.orientation = Orientation::Up;
      tri.side = std::move(t);
    } else {
      tri.orientation = Orientation::Down;
      tri.side = -t;
    }
    d.triangles.push_back(std::move(tri));
  }
  validate_dissection(d, options.pairwise_checks);
  return d;
}

IntegerDissection rescale_integer(const Dissection& d) {
  BigInt scale = 1;
  for (const auto& t : d.triangles) {
    for (const Rational* q : {&t.corner.x, &t.corner.y, &t.side}) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q->get_den_mpz_t());
    }
  }
  if (!scale.fits_slong_p()) throw std::overflow_error("dissection scale exceeds 64 bits");
  auto as_int = [&](const Rational& q) {
    const Rational scaled = q * scale;
    if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) throw std::overflow_error("non-integral rescale");
    return static_cast<std::int64_t>(scaled.get_num().get_si());
  };
  IntegerDissection out;
  out.scale = scale.get_si();
  for (const auto& t : d.triangles) {
    IntegerTriangle it{t.orientation, as_int(t.corner.x), as_int(t.corner.y), as_int(t.side)};
    ++(it.orientation == Orientation::Up ? out.up_counts : out.down_counts)[it.side];
    out.triangles.push_back(it);
  }
  return out;
}

std::pair<double, double> equilateral_point(const Point& p) {
  const double x = p.x.get_d();
  const double y = p.y.get_d();
  return {x + y / 2.0, std::sqrt(3.0) * y / 2.0};
}

std::vector<RenderTriangle> equilateral_render_coords(const Dissection& d) {
  std::vector<RenderTriangle> out;
  out.reserve(d.triangles.size());
  for (const auto& t : d.triangles) {
    RenderTriangle rt{t.orientation, {}};
    const auto vs = t.vertices();
    for (int k = 0; k < 3; ++k) rt.vertices[k] = equilateral_point(vs[k]);
    out.push_back(rt);
  }
  return out;
}

bool side_and_area_relations_hold(const IntegerDissection& d) {
  __int128 up_edge = 0, down_edge = 0, area = 0;
  for (const auto& [side, count] : d.up_counts) {
    up_edge += static_cast<__int128>(side) * count;
    area += static_cast<__int128>(side) * side * count;
  }
  for (const auto& [side, count] : d.down_counts) {
    down_edge += static_cast<__int128>(side) * count;
    area += static_cast<__int128>(side) * side * count;
  }
  const __int128 L = d.scale;
  return up_edge == down_edge + L && area == L * L;
}

}  // namespace tridiss
