#pragma once

#include "tridiss/bitrade.hpp"

namespace tridiss::reference {

// 2x2 latin square pair: the smallest bitrade.
Bitrade intercalate();

// T* = {(i, j, i+j mod n)}, T^ = {(i, j, i+j+1 mod n)}; genus 1 for n = 3.
Bitrade cyclic_bitrade(int n);

// Spherical 4x5 bitrade of size 12 with printed tau cycles.
Bitrade spherical_example();

// Spherical 4x5 bitrade of size 12 whose anchor (0, 0, 4) yields a
// 12-triangle separated dissection with scale 14.
Bitrade pointed_example();
inline constexpr Triple kPointedExampleAnchor{0, 0, 4};

// Separated bitrade recovered from a dissection with one degree-6 vertex
// (column 3 and symbol 3 are the fresh labels).
Bitrade degree_six_example();

}  // namespace tridiss::reference
