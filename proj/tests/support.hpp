#pragma once

#include <map>
#include <sstream>
#include <string>

#include "tridiss/bitrade.hpp"
#include "tridiss/reference.hpp"
#include "tridiss/solver.hpp"

namespace test_support {

// Parses "(000,022,044)(134,142)" into a map sending each triple to the next
// one in its cycle. Triples are written as three digits "rcs".
inline std::map<tridiss::Triple, tridiss::Triple> parse_cycles(const std::string& text) {
  std::map<tridiss::Triple, tridiss::Triple> next;
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const std::size_t end = text.find(')', pos);
    std::istringstream items(text.substr(pos + 1, end - pos - 1));
    std::vector<tridiss::Triple> cycle;
    std::string item;
    while (std::getline(items, item, ',')) {
      item.erase(0, item.find_first_not_of(' '));
      cycle.push_back({item[0] - '0', item[1] - '0', item[2] - '0'});
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) next[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = end;
  }
  return next;
}

inline std::map<tridiss::Triple, tridiss::Triple> as_map(const tridiss::Bitrade& b, const std::vector<int>& tau) {
  std::map<tridiss::Triple, tridiss::Triple> out;
  for (std::size_t i = 0; i < tau.size(); ++i) out[b.t_star()[i]] = b.t_star()[tau[i]];
  return out;
}

inline tridiss::Dissection solve_pointed(const tridiss::Bitrade& b, const tridiss::Triple& anchor) {
  return tridiss::dissection_from_solution(b, tridiss::solve_exact(tridiss::build_equations(b, anchor)));
}

inline tridiss::Dissection pointed_example_dissection() {
  return solve_pointed(tridiss::reference::pointed_example(), tridiss::reference::kPointedExampleAnchor);
}

inline tridiss::Dissection intercalate_dissection() {
  return solve_pointed(tridiss::reference::intercalate(), {0, 0, 0});
}

}  // namespace test_support
