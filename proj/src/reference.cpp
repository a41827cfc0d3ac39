#include "tridiss/reference.hpp"

namespace tridiss::reference {

namespace {
constexpr int _ = -1;
}

Bitrade intercalate() {
  return Bitrade::validate({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
}

Bitrade cyclic_bitrade(int n) {
  std::vector<Triple> star, delta;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      star.push_back({i, j, (i + j) % n});
      delta.push_back({i, j, (i + j + 1) % n});
    }
  }
  return Bitrade::validate(std::move(star), std::move(delta));
}

Bitrade spherical_example() {
  return bitrade_from_arrays({{0, _, 2, _, 4}, {_, _, _, 4, 2}, {1, 3, 0, 2, _}, {4, 1, _, 3, _}},
                             {{4, _, 0, _, 2}, {_, _, _, 2, 4}, {0, 1, 2, 3, _}, {1, 3, _, 4, _}});
}

Bitrade pointed_example() {
  return bitrade_from_arrays({{4, _, 0, _, 2}, {_, _, _, 2, 4}, {0, 1, 2, 3, _}, {1, 3, _, 4, _}},
                             {{0, _, 2, _, 4}, {_, _, _, 4, 2}, {1, 3, 0, 2, _}, {4, 1, _, 3, _}});
}

Bitrade degree_six_example() {
  return bitrade_from_arrays({{2, _, 3, 0}, {0, 1, 2, 3}, {1, 2, _, _}}, {{0, _, 2, 3}, {1, 2, 3, 0}, {2, 1, _, _}});
}

}  // namespace tridiss::reference
