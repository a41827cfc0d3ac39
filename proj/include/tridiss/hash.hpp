#pragma once

#include <cstdint>
#include <string_view>

namespace tridiss {

// 64-bit FNV-1a. Used only to place records into shards, never to decide equality.
inline std::uint64_t content_hash64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tridiss
