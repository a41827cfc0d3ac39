#include "tridiss/bitrade.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace tridiss {

namespace {

constexpr int kDuplicate = -2;

// The two coordinates held fixed when `free_coord` varies.
std::pair<int, int> fixed_coords(int free_coord) {
  switch (free_coord) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

std::uint64_t pair_key(const Triple& t, int free_coord) {
  const auto [a, b] = fixed_coords(free_coord);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t[a])) << 32) |
         static_cast<std::uint32_t>(t[b]);
}

std::unordered_map<std::uint64_t, int> index_by_pair(const std::vector<Triple>& ts, int free_coord) {
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(ts.size() * 2);
  for (int i = 0; i < static_cast<int>(ts.size()); ++i) {
    auto [it, inserted] = index.emplace(pair_key(ts[i], free_coord), i);
    if (!inserted) it->second = kDuplicate;
  }
  return index;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::R1: return "R1";
    case Axiom::R2: return "R2";
    default: return "R3";
  }
}

std::string violation_message(Axiom axiom, const Triple& w, int a, int b) {
  std::ostringstream os;
  os << "axiom " << axiom_name(axiom) << " violated at " << to_string(w);
  if (a >= 0) os << " on coordinates (" << a << "," << b << ")";
  return os.str();
}

Cycles cycles_of(const std::vector<int>& perm) {
  Cycles out;
  std::vector<bool> seen(perm.size(), false);
  for (int start = 0; start < static_cast<int>(perm.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.row) + "," + std::to_string(t.col) + "," + std::to_string(t.sym) + ")";
}

AxiomViolation::AxiomViolation(Axiom axiom, Triple witness, int coord_a, int coord_b)
    : std::runtime_error(violation_message(axiom, witness, coord_a, coord_b)),
      axiom_(axiom),
      witness_(witness),
      coord_a_(coord_a),
      coord_b_(coord_b) {}

Bitrade Bitrade::validate(std::vector<Triple> t_star, std::vector<Triple> t_delta) {
  if (t_star.empty() || t_delta.empty()) {
    throw std::invalid_argument("bitrade sets must be nonempty");
  }
  std::sort(t_star.begin(), t_star.end());
  std::sort(t_delta.begin(), t_delta.end());
  for (const auto* set : {&t_star, &t_delta}) {
    if (std::adjacent_find(set->begin(), set->end()) != set->end()) {
      throw std::invalid_argument("duplicate triple in bitrade set");
    }
  }

  // R1
  {
    std::vector<Triple> common;
    std::set_intersection(t_star.begin(), t_star.end(), t_delta.begin(), t_delta.end(),
                          std::back_inserter(common));
    if (!common.empty()) throw AxiomViolation(Axiom::R1, common.front(), -1, -1);
  }

  Bitrade b;
  b.star_ = std::move(t_star);
  b.delta_ = std::move(t_delta);
  for (int f = 0; f < 3; ++f) {
    b.star_by_pair_[f] = index_by_pair(b.star_, f);
    b.delta_by_pair_[f] = index_by_pair(b.delta_, f);
  }

  // R2 then R3, every triple against every coordinate pair.
  auto check = [](Axiom axiom, const std::vector<Triple>& from,
                  const std::array<std::unordered_map<std::uint64_t, int>, 3>& other) {
    for (const Triple& t : from) {
      for (int f = 0; f < 3; ++f) {
        auto it = other[f].find(pair_key(t, f));
        if (it == other[f].end() || it->second == kDuplicate) {
          const auto [a, c] = fixed_coords(f);
          throw AxiomViolation(axiom, t, a, c);
        }
      }
    }
  };
  check(Axiom::R2, b.star_, b.delta_by_pair_);
  check(Axiom::R3, b.delta_, b.star_by_pair_);

  for (int k = 0; k < 3; ++k) {
    std::set<int> s;
    for (const Triple& t : b.star_) s.insert(t[k]);
    b.labels_[k].assign(s.begin(), s.end());
  }
  return b;
}

int Bitrade::delta_partner(int star_index, int free_coord) const {
  return delta_by_pair_[free_coord].at(pair_key(star_[star_index], free_coord));
}

int Bitrade::star_partner(int delta_index, int free_coord) const {
  return star_by_pair_[free_coord].at(pair_key(delta_[delta_index], free_coord));
}

int Bitrade::star_index(const Triple& t) const {
  auto it = std::lower_bound(star_.begin(), star_.end(), t);
  return (it != star_.end() && *it == t) ? static_cast<int>(it - star_.begin()) : -1;
}

TauRep tau_representation(const Bitrade& b) {
  TauRep rep;
  rep.size = b.size();
  // tau_i = beta_j^-1 beta_k with (i, j, k) cyclic; beta_r frees coordinate r-1.
  constexpr std::array<std::pair<int, int>, 3> route{{{1, 2}, {2, 0}, {0, 1}}};
  for (int i = 0; i < 3; ++i) {
    const auto [inverse_free, forward_free] = route[i];
    auto& perm = rep.tau[i];
    perm.resize(b.size());
    for (int x = 0; x < b.size(); ++x) {
      perm[x] = b.star_partner(b.delta_partner(x, inverse_free), forward_free);
    }
    rep.cycles[i] = cycles_of(perm);
    rep.order += static_cast<int>(rep.cycles[i].size());
  }
  return rep;
}

int genus(const Bitrade& b) {
  const TauRep rep = tau_representation(b);
  const int twice_g = rep.size + 2 - rep.order;
  if (twice_g < 0 || twice_g % 2 != 0) {
    throw NonIntegralGenus("order " + std::to_string(rep.order) + " and size " +
                           std::to_string(rep.size) + " give no integral genus");
  }
  return twice_g / 2;
}

bool is_separated_bitrade(const Bitrade& b) {
  const TauRep rep = tau_representation(b);
  for (int k = 0; k < 3; ++k) {
    if (b.labels(k).size() != rep.cycles[k].size()) return false;
    // tau_k fixes coordinate k, so every cycle lies in one line; it must fill it.
    std::map<int, int> cycles_per_label;
    for (const auto& cycle : rep.cycles[k]) ++cycles_per_label[b.t_star()[cycle.front()][k]];
    for (const auto& [label, count] : cycles_per_label) {
      if (count != 1) return false;
    }
  }
  return true;
}

Bitrade swap(const Bitrade& b) { return Bitrade::validate(b.t_delta(), b.t_star()); }

Bitrade normalize_labels(const Bitrade& b) {
  std::array<std::map<int, int>, 3> relabel;
  for (int k = 0; k < 3; ++k) {
    int next = 0;
    for (int label : b.labels(k)) relabel[k][label] = next++;
  }
  auto apply = [&](const std::vector<Triple>& ts) {
    std::vector<Triple> out;
    out.reserve(ts.size());
    for (const Triple& t : ts) {
      out.push_back({relabel[0].at(t.row), relabel[1].at(t.col), relabel[2].at(t.sym)});
    }
    return out;
  };
  return Bitrade::validate(apply(b.t_star()), apply(b.t_delta()));
}

bool isotopic(const Bitrade& a, const Bitrade& b) {
  if (a.size() != b.size() || a.t_delta().size() != b.t_delta().size()) return false;
  for (int k = 0; k < 3; ++k) {
    if (a.labels(k).size() != b.labels(k).size()) return false;
  }
  const TauRep ta = tau_representation(a);
  const TauRep tb = tau_representation(b);
  const int n = a.size();

  // Orbits of <tau_1, tau_2, tau_3> on a's T*.
  std::vector<int> comp(n, -1);
  std::vector<int> roots;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    roots.push_back(s);
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(roots.size()) - 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; ++i) {
        int y = ta.tau[i][x];
        if (comp[y] < 0) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
      }
    }
  }

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  auto labels_consistent = [&]() {
    for (int k = 0; k < 3; ++k) {
      std::map<int, int> fwd, back;
      for (int x = 0; x < n; ++x) {
        int la = a.t_star()[x][k], lb = b.t_star()[image[x]][k];
        auto [i1, ok1] = fwd.emplace(la, lb);
        auto [i2, ok2] = back.emplace(lb, la);
        if (i1->second != lb || i2->second != la) return false;
      }
    }
    std::array<std::map<int, int>, 3> maps;
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k < 3; ++k) maps[k][a.t_star()[x][k]] = b.t_star()[image[x]][k];
    }
    std::vector<Triple> mapped;
    for (const Triple& t : a.t_delta()) {
      mapped.push_back({maps[0].at(t.row), maps[1].at(t.col), maps[2].at(t.sym)});
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.t_delta();
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t c) -> bool {
    if (c == roots.size()) return labels_consistent();
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      std::vector<int> placed;
      bool ok = true;
      std::vector<std::pair<int, int>> stack{{roots[c], y}};
      while (!stack.empty() && ok) {
        auto [x, fx] = stack.back();
        stack.pop_back();
        if (image[x] >= 0) {
          ok = image[x] == fx;
          continue;
        }
        if (used[fx]) {
          ok = false;
          continue;
        }
        image[x] = fx;
        used[fx] = true;
        placed.push_back(x);
        for (int i = 0; i < 3; ++i) stack.emplace_back(ta.tau[i][x], tb.tau[i][fx]);
      }
      if (ok && assign(c + 1)) return true;
      for (int x : placed) {
        used[image[x]] = false;
        image[x] = -1;
      }
    }
    return false;
  };
  return assign(0);
}

std::string format_cycles(const Bitrade& b, const Cycles& cycles) {
  bool compact = true;
  for (const Triple& t : b.t_star()) compact = compact && t.row < 10 && t.col < 10 && t.sym < 10;
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Triple& t = b.t_star()[cycle[i]];
      if (i) out += ',';
      if (compact) {
        out += std::to_string(t.row) + std::to_string(t.col) + std::to_string(t.sym);
      } else {
        out += std::to_string(t.row) + "." + std::to_string(t.col) + "." + std::to_string(t.sym);
      }
    }
    out += ')';
  }
  return out;
}

std::string to_partial_arrays(const Bitrade& b) {
  const auto& rows = b.labels(0);
  const auto& cols = b.labels(1);
  std::ostringstream os;
  auto table = [&](const char* marker, const std::vector<Triple>& ts) {
    std::map<std::pair<int, int>, int> cell;
    for (const Triple& t : ts) cell[{t.row, t.col}] = t.sym;
    os << marker;
    for (int c : cols) os << '\t' << c;
    os << '\n';
    for (int r : rows) {
      os << r;
      for (int c : cols) {
        auto it = cell.find({r, c});
        os << '\t';
        if (it == cell.end()) {
          os << '.';
        } else {
          os << it->second;
        }
      }
      os << '\n';
    }
  };
  table("*", b.t_star());
  table("^", b.t_delta());
  return os.str();
}

void write_triple_list(std::ostream& out, const Bitrade& b, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "*\n";
  for (const Triple& t : b.t_star()) out << t.row << ' ' << t.col << ' ' << t.sym << '\n';
  out << "^\n";
  for (const Triple& t : b.t_delta()) out << t.row << ' ' << t.col << ' ' << t.sym << '\n';
}

std::vector<BitradeRecord> read_triple_list(std::istream& in) {
  std::vector<BitradeRecord> out;
  std::vector<Triple> star, delta;
  std::vector<std::string> comments, pending_comments;
  enum class Section { None, Star, Delta } section = Section::None;
  int line_no = 0;

  auto flush = [&]() {
    if (section == Section::None) return;
    out.push_back({Bitrade::validate(std::move(star), std::move(delta)), std::move(comments)});
    star.clear();
    delta.clear();
    comments.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto text = line.find_first_not_of(" \t", first + 1);
      pending_comments.push_back(text == std::string::npos ? std::string() : line.substr(text));
      continue;
    }
    if (line[first] == '*') {
      if (section == Section::Delta) flush();
      if (section == Section::Star) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": repeated '*' marker");
      }
      section = Section::Star;
      comments = std::move(pending_comments);
      pending_comments.clear();
      continue;
    }
    if (line[first] == '^') {
      if (section != Section::Star) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": '^' without '*' section");
      }
      section = Section::Delta;
      continue;
    }
    std::istringstream fields(line);
    Triple t;
    std::string extra;
    if (!(fields >> t.row >> t.col >> t.sym) || (fields >> extra) || section == Section::None ||
        t.row < 0 || t.col < 0 || t.sym < 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed triple '" + line + "'");
    }
    (section == Section::Star ? star : delta).push_back(t);
  }
  if (section == Section::Star) throw std::invalid_argument("record ends without '^' section");
  flush();
  return out;
}

Bitrade bitrade_from_arrays(const std::vector<std::vector<int>>& star,
                            const std::vector<std::vector<int>>& delta) {
  auto collect = [](const std::vector<std::vector<int>>& cells) {
    std::vector<Triple> ts;
    for (int r = 0; r < static_cast<int>(cells.size()); ++r) {
      for (int c = 0; c < static_cast<int>(cells[r].size()); ++c) {
        if (cells[r][c] >= 0) ts.push_back({r, c, cells[r][c]});
      }
    }
    return ts;
  };
  return Bitrade::validate(collect(star), collect(delta));
}

}  // namespace tridiss
