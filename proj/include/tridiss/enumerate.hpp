#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tridiss/bitrade.hpp"
#include "tridiss/geometry.hpp"

namespace tridiss {

// Where a dissection came from: input bitrade index, whether T* and T^ were
// exchanged, and the anchor's index in that bitrade's T*.
struct SourceRef {
  int bitrade = -1;
  bool swapped = false;
  int anchor = -1;

  auto operator<=>(const SourceRef&) const = default;
  std::string to_string() const;  // "17:*:4" or "17:^:4"
  static SourceRef parse(const std::string& text);
};

struct DissectionRecord {
  int size = 0;
  int automorphisms = 0;
  bool separated = false;
  bool perfect = false;
  bool trivial = false;
  std::int64_t scale = 0;
  std::int64_t max_side = 0;
  std::int64_t min_side = 0;
  SourceRef witness;          // least source seen
  std::uint64_t sources = 0;  // (bitrade, order, anchor) hits; 0 unless counted

  friend bool operator==(const DissectionRecord&, const DissectionRecord&) = default;
};

// Derives every record field except provenance from the dissection.
DissectionRecord analyze(const Dissection& d);

// Signature -> record. Merging adds source counters, keeps the least witness
// and requires derived fields to agree, so it is associative, commutative
// and, for the key set, idempotent.
class DissectionStore {
 public:
  void insert(const std::string& signature, const DissectionRecord& record);
  void merge(const DissectionStore& other);

  const std::map<std::string, DissectionRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const DissectionRecord* find(const std::string& signature) const;

  int max_size = 0;             // dissection sizes <= max_size are complete
  bool counted_sources = false;  // records carry source counters

  friend bool operator==(const DissectionStore&, const DissectionStore&) = default;

 private:
  std::map<std::string, DissectionRecord> records_;
};

void merge_record(DissectionRecord& into, const DissectionRecord& from);

struct SourceBitrade {
  Bitrade bitrade;
  std::string provenance;  // e.g. "eulerian_v10.pc#1"
};

// Bitrades of every planar Eulerian triangulation on 6..max_size+2 vertices
// from the internal generator, ordered by vertex count then canonical code.
// Provenance reads "gen:v<vertices>#<k>" with k counted from 1.
std::vector<SourceBitrade> internal_bitrades(int max_size);

enum class ClassFilter { All, Separated };

struct EnumerateOptions {
  int max_size = 13;
  int workers = 1;
  ClassFilter class_filter = ClassFilter::All;
  bool perfect_only = false;
  bool source_counting = false;
  bool pairwise_checks = false;
};

class EnumerationError : public std::runtime_error {
 public:
  EnumerationError(const std::string& provenance, SourceRef where, const std::string& cause);
  const SourceRef& where() const { return where_; }

 private:
  SourceRef where_;
};

// Sizes reachable from one ordered bitrade over all anchors of its T*.
// `pieces` counts triangles; `vertex_sizes` counts vertices minus two, which
// equals the triangle count exactly when the dissection is separated.
struct SizeProfile {
  std::set<int> pieces;
  std::set<int> vertex_sizes;

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

struct BitradeSizes {
  int bitrade = -1;
  bool swapped = false;
  int size = 0;
  SizeProfile sizes;

  friend bool operator==(const BitradeSizes&, const BitradeSizes&) = default;
};

struct EnumerationResult {
  DissectionStore store;
  std::vector<BitradeSizes> sizes;  // (T*, T^) then (T^, T*) per input bitrade, input order
};

// For each bitrade, both (T*, T^) and (T^, T*), every anchor of T*: solve,
// build the dissection, and insert it by canonical signature.
EnumerationResult enumerate_dissections(std::span<const SourceBitrade> bitrades, const EnumerateOptions& options);

// The order (T*, T^) of `b` only; apply swap() for the other one.
SizeProfile bitrade_dissection_sizes(const Bitrade& b);

class UnknownSignature : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

std::uint64_t source_bitrade_counts(const DissectionStore& store, const std::string& signature);

struct CountsRow {
  int n = 0;
  std::int64_t total = 0;
  std::array<std::int64_t, 4> by_automorphism{};  // orders 1, 2, 3, 6
  std::int64_t separated = 0;
  std::int64_t nonseparated = 0;
  std::int64_t perfect = 0;
  std::int64_t trivial = 0;
};

struct CountsTable {
  std::vector<CountsRow> rows;  // ascending n, only sizes present
  int max_size = 0;
  std::vector<std::string> warnings;

  const CountsRow* row(int n) const;
};

// `requested_max` > store.max_size adds an IncompleteRange warning.
CountsTable counts_report(const DissectionStore& store, ClassFilter filter = ClassFilter::All, int requested_max = 0);

// Re-keys the store by size and vertex-list signature, keeping for each key the
// record of the least triangle signature. Distinct dissections with one
// vertex set collapse, as they do under a vertex-list dedup.
DissectionStore collapse_by_vertex_list(const DissectionStore& store);

struct AsymptoticsRow {
  int n = 0;
  std::int64_t d = 0;  // dissections of size n
  double e = 0;        // 3.43^(n-8)
  double mu = 0;       // e / d
};

std::vector<AsymptoticsRow> asymptotics_report(const CountsTable& table);

struct ExtremeRow {
  int n = 0;
  std::int64_t max_side = 0;
  std::int64_t min_side = 0;
  std::string signature;
};

// Per size, the dissection with the largest max/min side ratio (ties: least signature).
std::vector<ExtremeRow> extremes_report(const DissectionStore& store);

struct PerfectRow {
  int n = 0;
  std::int64_t perfect = 0;
};

// Every size 4..max_size except 5, zero counts included.
std::vector<PerfectRow> perfect_report(const DissectionStore& store);

struct SizeSetRow {
  int n = 0;
  std::set<int> sizes;     // vertex sizes
  SourceRef example;       // least (bitrade, order) with this set; anchor unused
  int bitrades = 0;        // ordered bitrades sharing the set
};

// Distinct vertex-size sets of ordered bitrades of size n that do not
// reach n, i.e. have no separated dissection of their own size.
std::vector<SizeSetRow> missing_own_size_report(std::span<const BitradeSizes> sizes);

}  // namespace tridiss
