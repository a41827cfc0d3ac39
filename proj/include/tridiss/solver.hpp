#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridiss/bitrade.hpp"
#include "tridiss/rational.hpp"

namespace tridiss {

class AnchorNotInTStar : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnderdeterminedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ValidationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Eq(T, a): anchor row = 0, anchor column = 0, anchor symbol = 1, and
// row + column - symbol = 0 for every other triple of T*. Variables are the
// row labels, then column labels, then symbol labels, each ascending.
struct LinearSystem {
  struct Term {
    int variable;
    int coefficient;
  };
  struct Equation {
    std::vector<Term> terms;
    int constant = 0;
  };

  Triple anchor;
  std::array<std::vector<int>, 3> labels;
  std::vector<Equation> equations;

  int variable_count() const {
    return static_cast<int>(labels[0].size() + labels[1].size() + labels[2].size());
  }
  // Throws std::out_of_range for an unknown label.
  int variable(int coord, int label) const;
};

LinearSystem build_equations(const Bitrade& b, const Triple& anchor);

struct PointedSolution {
  Triple anchor;
  std::array<std::map<int, Rational>, 3> values;  // rows, columns, symbols

  const Rational& value(int coord, int label) const { return values[coord].at(label); }
  // All row values distinct, all column values distinct, all symbol values distinct.
  bool is_separated() const;
};

// Fraction-free elimination with first-nonzero-row pivoting, then exact
// back-substitution.
PointedSolution solve_exact(const LinearSystem& sys);

enum class Orientation : std::uint8_t { Up = 0, Down = 1 };

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
};

// Sheared model: Sigma = {x >= 0, y >= 0, x + y <= 1}. An up triangle has its
// right-angle corner at the lower left, a down triangle at the upper right.
struct Triangle {
  Orientation orientation = Orientation::Up;
  Point corner;
  Rational side;
  Triple source{-1, -1, -1};

  std::array<Point, 3> vertices() const;
};

// Total order: orientation (up first), corner, side. Sources are ignored.
std::strong_ordering compare_triangles(const Triangle& a, const Triangle& b);

struct Dissection {
  std::vector<Triangle> triangles;

  int size() const { return static_cast<int>(triangles.size()); }
  std::vector<Point> vertex_set() const;  // sorted, distinct
};

struct DissectionOptions {
  bool pairwise_checks = true;
};

// One triangle per non-degenerate T^ triple; then area, bounds and (optionally)
// pairwise interior-disjointness are verified exactly.
Dissection dissection_from_solution(const Bitrade& b, const PointedSolution& sol,
                                    const DissectionOptions& options = {});

// Throws ValidationFailure naming the failed check (area, out-of-bounds, overlap).
void validate_dissection(const Dissection& d, bool pairwise_checks = true);

// Interiors intersect.
bool triangles_overlap(const Triangle& a, const Triangle& b);

struct IntegerTriangle {
  Orientation orientation = Orientation::Up;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t side = 0;
};

struct IntegerDissection {
  std::int64_t scale = 0;  // side length of Sigma
  std::vector<IntegerTriangle> triangles;
  std::map<std::int64_t, int> up_counts;    // u_s
  std::map<std::int64_t, int> down_counts;  // d_s

  int size() const { return static_cast<int>(triangles.size()); }
};

// Scales Sigma to the least common denominator of every corner and side.
IntegerDissection rescale_integer(const Dissection& d);

// sum s*u_s = sum s*d_s + L (bottom edge) and sum (u_s + d_s)*s^2 = L^2 (area).
bool side_and_area_relations_hold(const IntegerDissection& d);

struct RenderTriangle {
  Orientation orientation;
  std::array<std::pair<double, double>, 3> vertices;
};

// (x, y) -> (x + y/2, sqrt(3) y / 2); display only.
std::pair<double, double> equilateral_point(const Point& p);
std::vector<RenderTriangle> equilateral_render_coords(const Dissection& d);

}  // namespace tridiss
