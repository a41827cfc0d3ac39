#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tridiss {

// A (row, column, symbol) triple. The three coordinates live in separate
// label namespaces: a row label is never compared with a column label.
struct Triple {
  int row = 0;
  int col = 0;
  int sym = 0;

  int operator[](int coord) const { return coord == 0 ? row : coord == 1 ? col : sym; }
  int& operator[](int coord) { return coord == 0 ? row : coord == 1 ? col : sym; }

  auto operator<=>(const Triple&) const = default;
};

std::string to_string(const Triple& t);

enum class Axiom { R1, R2, R3 };

class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(Axiom axiom, Triple witness, int coord_a, int coord_b);

  Axiom axiom() const { return axiom_; }
  const Triple& witness() const { return witness_; }
  // Fixed coordinate pair that failed (0=row, 1=col, 2=sym); -1 for R1.
  std::pair<int, int> coordinates() const { return {coord_a_, coord_b_}; }

 private:
  Axiom axiom_;
  Triple witness_;
  int coord_a_;
  int coord_b_;
};

// Latin bitrade (T*, T^). Immutable once validated.
class Bitrade {
 public:
  // Checks R1-R3 exhaustively and builds the pair indexes.
  static Bitrade validate(std::vector<Triple> t_star, std::vector<Triple> t_delta);

  const std::vector<Triple>& t_star() const { return star_; }
  const std::vector<Triple>& t_delta() const { return delta_; }
  int size() const { return static_cast<int>(star_.size()); }

  // Sorted distinct labels for coordinate 0 (rows), 1 (columns) or 2 (symbols).
  const std::vector<int>& labels(int coord) const { return labels_[coord]; }

  // Index into t_delta() of the unique triple agreeing with t_star()[i]
  // everywhere except coordinate `free_coord` (the inverse of beta).
  int delta_partner(int star_index, int free_coord) const;
  // Index into t_star() of the unique triple agreeing with t_delta()[j]
  // everywhere except coordinate `free_coord` (beta_{free_coord+1}).
  int star_partner(int delta_index, int free_coord) const;

  int star_index(const Triple& t) const;  // -1 when absent

  friend bool operator==(const Bitrade& a, const Bitrade& b) {
    return a.star_ == b.star_ && a.delta_ == b.delta_;
  }

 private:
  Bitrade() = default;

  std::vector<Triple> star_;
  std::vector<Triple> delta_;
  std::array<std::vector<int>, 3> labels_;
  // For each free coordinate, key of the two fixed coordinates -> index.
  std::array<std::unordered_map<std::uint64_t, int>, 3> star_by_pair_;
  std::array<std::unordered_map<std::uint64_t, int>, 3> delta_by_pair_;
};

using Cycles = std::vector<std::vector<int>>;

// tau_1 = beta_2^-1 beta_3, tau_2 = beta_3^-1 beta_1, tau_3 = beta_1^-1 beta_2,
// composed left to right, acting on indexes of t_star().
struct TauRep {
  std::array<std::vector<int>, 3> tau;
  std::array<Cycles, 3> cycles;  // each cycle starts at its least index; cycles sorted
  int size = 0;
  int order = 0;  // z(tau_1) + z(tau_2) + z(tau_3)
};

TauRep tau_representation(const Bitrade& b);

class NonIntegralGenus : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// g from order(T) = size(T) + 2 - 2g.
int genus(const Bitrade& b);

// Rows, columns and symbols are in bijection with the cycles of tau_1, tau_2, tau_3.
bool is_separated_bitrade(const Bitrade& b);

// (T^, T*).
Bitrade swap(const Bitrade& b);

// Independent relabelling of rows, columns and symbols carrying one bitrade onto the other.
bool isotopic(const Bitrade& a, const Bitrade& b);

// Relabels each coordinate to 0..k-1 in ascending order of the old labels.
Bitrade normalize_labels(const Bitrade& b);

// Cycle notation over t_star entries, e.g. "(000,022,044)(134,142)".
std::string format_cycles(const Bitrade& b, const Cycles& cycles);

// Two aligned partial arrays (rows x columns, cells hold the symbol).
std::string to_partial_arrays(const Bitrade& b);

// Line format: '#' comments, a "*" line opening T*, a "^" line opening T^,
// then one "r c s" triple per line. A new "*" after a "^" section starts the
// next record.
void write_triple_list(std::ostream& out, const Bitrade& b, const std::string& comment = {});

struct BitradeRecord {
  Bitrade bitrade;
  std::vector<std::string> comments;
};

std::vector<BitradeRecord> read_triple_list(std::istream& in);

// Builds a bitrade from row-major partial arrays: cells[r][c] is a symbol or -1.
Bitrade bitrade_from_arrays(const std::vector<std::vector<int>>& star,
                            const std::vector<std::vector<int>>& delta);

}  // namespace tridiss
