#include <algorithm>
#include <optional>

#include "doctest.h"
#include "support.hpp"
#include "tridiss/geometry.hpp"
#include "tridiss/reference.hpp"
#include "tridiss/solver.hpp"

using namespace tridiss;
using test_support::intercalate_dissection;
using test_support::pointed_example_dissection;
using test_support::solve_pointed;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Dissection grid(int L) {
  Dissection d;
  for (int i = 0; i < L; ++i)
    for (int j = 0; i + j < L; ++j) d.triangles.push_back({Orientation::Up, {q(i, L), q(j, L)}, q(1, L)});
  for (int i = 1; i <= L; ++i)
    for (int j = 1; i + j <= L; ++j) d.triangles.push_back({Orientation::Down, {q(i, L), q(j, L)}, q(1, L)});
  return d;
}

bool has_degree_six(const Dissection& d) {
  const auto degrees = vertex_degrees(d);
  return std::any_of(degrees.begin(), degrees.end(), [](const auto& entry) { return entry.second == 6; });
}

// A dissection of the degree-six example bitrade that has a vertex met by six triangles.
std::optional<Dissection> six_way_dissection() {
  for (const Bitrade& b : {reference::degree_six_example(), swap(reference::degree_six_example())}) {
    for (const Triple& a : b.t_star()) {
      Dissection d = solve_pointed(b, a);
      if (has_degree_six(d)) return d;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("each symmetry maps Sigma onto itself and the six form a group") {
    const std::vector<Point> corners{{0, 0}, {1, 0}, {0, 1}};
    const Point inner{q(1, 5), q(2, 7)};
    for (Symmetry s : kSymmetries) {
      std::vector<Point> image;
      for (const auto& p : corners) image.push_back(apply(s, p));
      std::sort(image.begin(), image.end());
      CHECK(image == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
      for (Symmetry t : kSymmetries) {
        const Point composed = apply(t, apply(s, inner));
        const bool closed = std::any_of(kSymmetries.begin(), kSymmetries.end(),
                                        [&](Symmetry u) { return apply(u, inner) == composed; });
        CHECK(closed);
      }
    }
  }

  TEST_CASE("symmetries keep orientation and side") {
    const Dissection d = pointed_example_dissection();
    for (Symmetry s : kSymmetries) {
      const Dissection image = apply(s, d);
      validate_dissection(image, true);
      for (std::size_t i = 0; i < d.triangles.size(); ++i) {
        CHECK(image.triangles[i].orientation == d.triangles[i].orientation);
        CHECK(image.triangles[i].side == d.triangles[i].side);
      }
    }
  }

  TEST_CASE("signature is invariant and parses back") {
    for (const Dissection& d : {intercalate_dissection(), pointed_example_dissection(), grid(3)}) {
      const Signature sig = canonical_signature(d);
      for (Symmetry s : kSymmetries) CHECK(canonical_signature(apply(s, d)) == sig);
      const Dissection parsed = parse_signature(sig.text);
      CHECK(canonical_signature(parsed) == sig);
      CHECK(parsed.size() == d.size());
    }
    CHECK(canonical_signature(intercalate_dissection()).text ==
          "u 0/1 0/1 1/2;u 0/1 1/2 1/2;u 1/2 0/1 1/2;d 1/2 1/2 1/2");
    CHECK(canonical_signature(apply(Symmetry::SwapXY, intercalate_dissection())) ==
          canonical_signature(intercalate_dissection()));
    CHECK_THROWS_AS(parse_signature("u 0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signature("x 0 0 1"), std::invalid_argument);
  }

  TEST_CASE("vertex list signature agrees on small examples") {
    CHECK(vertex_list_signature(intercalate_dissection()) ==
          vertex_list_signature(apply(Symmetry::RotateLeft, intercalate_dissection())));
    CHECK(vertex_list_signature(pointed_example_dissection()) != vertex_list_signature(intercalate_dissection()));
  }

  TEST_CASE("swapped example with a matching anchor is a different dissection") {
    const Dissection other = solve_pointed(reference::spherical_example(), {0, 0, 0});
    CHECK(other.size() == 12);
    CHECK(canonical_signature(other) != canonical_signature(pointed_example_dissection()));
  }

  TEST_CASE("automorphism orders") {
    CHECK(automorphism_order(intercalate_dissection()) == 6);
    CHECK(automorphism_order(pointed_example_dissection()) == 1);
    CHECK(automorphism_order(grid(3)) == 6);
  }

  TEST_CASE("separated classification") {
    CHECK(classify_separated(intercalate_dissection()));
    CHECK(classify_separated(pointed_example_dissection()));
    CHECK_FALSE(classify_separated(grid(3)));
    const auto six = six_way_dissection();
    REQUIRE(six.has_value());
    CHECK_FALSE(classify_separated(*six));
  }

  TEST_CASE("recovering bitrades") {
    CHECK(isotopic(recover_bitrade(intercalate_dissection()), reference::intercalate()));
    CHECK(isotopic(recover_bitrade(pointed_example_dissection()), reference::pointed_example()));

    const PointedBitrade pb = recover_pointed_bitrade(pointed_example_dissection());
    CHECK(canonical_signature(solve_pointed(pb.bitrade, pb.anchor)) == canonical_signature(pointed_example_dissection()));

    const auto six = six_way_dissection();
    REQUIRE(six.has_value());
    const Bitrade recovered = recover_bitrade(*six);
    CHECK(recovered.size() == 9);
    CHECK(recovered.labels(0).size() == 3);
    CHECK(recovered.labels(1).size() == 4);
    CHECK(isotopic(recovered, reference::degree_six_example()));
    const PointedBitrade six_pointed = recover_pointed_bitrade(*six);
    CHECK(canonical_signature(solve_pointed(six_pointed.bitrade, six_pointed.anchor)) == canonical_signature(*six));
  }

  TEST_CASE("perfect, trivial and side extremes") {
    const IntegerDissection inter = rescale_integer(intercalate_dissection());
    CHECK_FALSE(is_perfect(inter));
    CHECK(is_trivial(inter));
    CHECK(max_min_sides(inter) == std::pair<std::int64_t, std::int64_t>{1, 1});

    const IntegerDissection g3 = rescale_integer(grid(3));
    CHECK(g3.scale == 3);
    CHECK(is_trivial(g3));
    CHECK(side_and_area_relations_hold(g3));

    const IntegerDissection example = rescale_integer(pointed_example_dissection());
    CHECK_FALSE(is_trivial(example));
    CHECK_FALSE(is_perfect(example));
  }
}
