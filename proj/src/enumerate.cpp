#include "tridiss/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "tridiss/generate.hpp"
#include "tridiss/hash.hpp"
#include "tridiss/ingest.hpp"
#include "tridiss/solver.hpp"

namespace tridiss {

std::string SourceRef::to_string() const {
  return std::to_string(bitrade) + (swapped ? ":^:" : ":*:") + std::to_string(anchor);
}

SourceRef SourceRef::parse(const std::string& text) {
  SourceRef ref;
  char c1 = 0, order = 0, c2 = 0;
  std::istringstream in(text);
  std::string rest;
  if (!(in >> ref.bitrade >> c1 >> order >> c2 >> ref.anchor) || c1 != ':' || c2 != ':' ||
      (order != '*' && order != '^') || (in >> rest)) {
    throw std::invalid_argument("malformed source reference '" + text + "'");
  }
  ref.swapped = order == '^';
  return ref;
}

std::vector<SourceBitrade> internal_bitrades(int max_size) {
  std::vector<SourceBitrade> out;
  const auto levels = eulerian_triangulations(max_size + 2);
  for (std::size_t v = 6; v < levels.size(); ++v) {
    for (std::size_t k = 0; k < levels[v].size(); ++k) {
      out.push_back({triangulation_to_bitrade(levels[v][k]), "gen:v" + std::to_string(v) + "#" + std::to_string(k + 1)});
    }
  }
  return out;
}

DissectionRecord analyze(const Dissection& d) {
  DissectionRecord r;
  r.size = d.size();
  r.automorphisms = automorphism_order(d);
  r.separated = classify_separated(d);
  const IntegerDissection integral = rescale_integer(d);
  r.perfect = is_perfect(integral);
  r.trivial = is_trivial(integral);
  r.scale = integral.scale;
  std::tie(r.max_side, r.min_side) = max_min_sides(integral);
  return r;
}

void merge_record(DissectionRecord& into, const DissectionRecord& from) {
  if (into.size != from.size || into.automorphisms != from.automorphisms || into.separated != from.separated ||
      into.perfect != from.perfect || into.trivial != from.trivial || into.scale != from.scale ||
      into.max_side != from.max_side || into.min_side != from.min_side) {
    throw std::logic_error("records for one signature disagree on derived fields");
  }
  into.witness = std::min(into.witness, from.witness);
  into.sources += from.sources;
}

void DissectionStore::insert(const std::string& signature, const DissectionRecord& record) {
  auto [it, inserted] = records_.emplace(signature, record);
  if (!inserted) merge_record(it->second, record);
}

void DissectionStore::merge(const DissectionStore& other) {
  for (const auto& [sig, rec] : other.records_) insert(sig, rec);
  max_size = std::max(max_size, other.max_size);
  counted_sources = counted_sources || other.counted_sources;
}

const DissectionRecord* DissectionStore::find(const std::string& signature) const {
  auto it = records_.find(signature);
  return it == records_.end() ? nullptr : &it->second;
}

EnumerationError::EnumerationError(const std::string& provenance, SourceRef where, const std::string& cause)
    : std::runtime_error("while processing " + provenance + " (" + where.to_string() + "): " + cause),
      where_(where) {}

namespace {

class ShardedStore {
 public:
  // Records a hit for an already-known signature; false when unseen.
  bool touch(const std::string& sig, const SourceRef& ref, std::uint64_t hits) {
    Shard& s = shard(sig);
    std::lock_guard lock(s.mutex);
    auto it = s.records.find(sig);
    if (it == s.records.end()) return false;
    it->second.witness = std::min(it->second.witness, ref);
    it->second.sources += hits;
    return true;
  }

  void insert(const std::string& sig, const DissectionRecord& rec) {
    Shard& s = shard(sig);
    std::lock_guard lock(s.mutex);
    auto [it, inserted] = s.records.emplace(sig, rec);
    if (!inserted) merge_record(it->second, rec);
  }

  DissectionStore collect() {
    DissectionStore out;
    for (auto& s : shards_) {
      for (auto& [sig, rec] : s.records) out.insert(sig, rec);
    }
    return out;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::map<std::string, DissectionRecord> records;
  };

  Shard& shard(const std::string& sig) { return shards_[content_hash64(sig) % shards_.size()]; }

  std::array<Shard, 64> shards_;
};

}  // namespace

EnumerationResult enumerate_dissections(std::span<const SourceBitrade> bitrades, const EnumerateOptions& options) {
  if (options.max_size < 4) throw std::invalid_argument("max size must be at least 4");
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");

  const std::size_t units = bitrades.size() * 2;
  std::vector<SizeProfile> unit_sizes(units);
  ShardedStore sharded;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  const std::uint64_t hits = options.source_counting ? 1 : 0;

  auto work = [&]() {
    while (!failed.load()) {
      const std::size_t unit = next.fetch_add(1);
      if (unit >= units) return;
      const int index = static_cast<int>(unit / 2);
      const bool swapped = unit % 2 == 1;
      SourceRef ref{index, swapped, -1};
      try {
        const Bitrade b = swapped ? swap(bitrades[index].bitrade) : bitrades[index].bitrade;
        for (int a = 0; a < b.size(); ++a) {
          ref.anchor = a;
          const PointedSolution sol = solve_exact(build_equations(b, b.t_star()[a]));
          const Dissection d = dissection_from_solution(b, sol, {options.pairwise_checks});
          unit_sizes[unit].pieces.insert(d.size());
          unit_sizes[unit].vertex_sizes.insert(static_cast<int>(d.vertex_set().size()) - 2);
          if (d.size() > options.max_size) continue;
          const std::string sig = canonical_signature(d).text;
          if (sharded.touch(sig, ref, hits)) continue;
          DissectionRecord rec = analyze(d);
          if (options.class_filter == ClassFilter::Separated && !rec.separated) continue;
          if (options.perfect_only && !rec.perfect) continue;
          rec.witness = ref;
          rec.sources = hits;
          sharded.insert(sig, rec);
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::make_exception_ptr(EnumerationError(bitrades[index].provenance, ref, e.what()));
        failed = true;
      }
    }
  };

  if (options.workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < options.workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  EnumerationResult result;
  result.store = sharded.collect();
  result.store.max_size = options.max_size;
  result.store.counted_sources = options.source_counting;
  for (std::size_t unit = 0; unit < units; ++unit) {
    const int index = static_cast<int>(unit / 2);
    result.sizes.push_back({index, unit % 2 == 1, bitrades[index].bitrade.size(), std::move(unit_sizes[unit])});
  }
  return result;
}

SizeProfile bitrade_dissection_sizes(const Bitrade& b) {
  SizeProfile sizes;
  for (const Triple& a : b.t_star()) {
    const Dissection d = dissection_from_solution(b, solve_exact(build_equations(b, a)), {false});
    sizes.pieces.insert(d.size());
    sizes.vertex_sizes.insert(static_cast<int>(d.vertex_set().size()) - 2);
  }
  return sizes;
}

std::uint64_t source_bitrade_counts(const DissectionStore& store, const std::string& signature) {
  const DissectionRecord* rec = store.find(signature);
  if (!rec) throw UnknownSignature("signature not present in store");
  return rec->sources;
}

DissectionStore collapse_by_vertex_list(const DissectionStore& store) {
  std::map<std::string, std::pair<std::string, DissectionRecord>> by_vertices;
  for (const auto& [sig, rec] : store.records()) {
    // records() is ordered, so the first signature seen per key is the least
    const std::string key = std::to_string(rec.size) + "|" + vertex_list_signature(parse_signature(sig));
    by_vertices.try_emplace(key, sig, rec);
  }
  DissectionStore out;
  out.max_size = store.max_size;
  out.counted_sources = store.counted_sources;
  for (const auto& [key, entry] : by_vertices) out.insert(entry.first, entry.second);
  return out;
}

const CountsRow* CountsTable::row(int n) const {
  auto it = std::find_if(rows.begin(), rows.end(), [n](const CountsRow& r) { return r.n == n; });
  return it == rows.end() ? nullptr : &*it;
}

CountsTable counts_report(const DissectionStore& store, ClassFilter filter, int requested_max) {
  std::map<int, CountsRow> rows;
  for (const auto& [sig, rec] : store.records()) {
    if (filter == ClassFilter::Separated && !rec.separated) continue;
    CountsRow& row = rows[rec.size];
    row.n = rec.size;
    ++row.total;
    switch (rec.automorphisms) {
      case 1: ++row.by_automorphism[0]; break;
      case 2: ++row.by_automorphism[1]; break;
      case 3: ++row.by_automorphism[2]; break;
      case 6: ++row.by_automorphism[3]; break;
      default: throw std::logic_error("automorphism order " + std::to_string(rec.automorphisms) + " does not divide 6");
    }
    ++(rec.separated ? row.separated : row.nonseparated);
    row.perfect += rec.perfect ? 1 : 0;
    row.trivial += rec.trivial ? 1 : 0;
  }
  CountsTable table;
  table.max_size = store.max_size;
  for (auto& [n, row] : rows) table.rows.push_back(row);
  if (requested_max > store.max_size) {
    table.warnings.push_back("IncompleteRange: rows above n = " + std::to_string(store.max_size) +
                             " were requested but the run stopped at max size " + std::to_string(store.max_size));
  }
  return table;
}

std::vector<AsymptoticsRow> asymptotics_report(const CountsTable& table) {
  std::vector<AsymptoticsRow> out;
  for (const auto& row : table.rows) {
    if (row.n < 8) continue;
    const double e = std::pow(3.43, row.n - 8);
    out.push_back({row.n, row.total, e, e / static_cast<double>(row.total)});
  }
  return out;
}

std::vector<ExtremeRow> extremes_report(const DissectionStore& store) {
  std::map<int, ExtremeRow> best;
  for (const auto& [sig, rec] : store.records()) {
    auto it = best.find(rec.size);
    if (it == best.end()) {
      best.emplace(rec.size, ExtremeRow{rec.size, rec.max_side, rec.min_side, sig});
      continue;
    }
    ExtremeRow& cur = it->second;
    // Ratios compared by cross-multiplication; records iterate in signature order.
    const __int128 lhs = static_cast<__int128>(rec.max_side) * cur.min_side;
    const __int128 rhs = static_cast<__int128>(cur.max_side) * rec.min_side;
    if (lhs > rhs) cur = {rec.size, rec.max_side, rec.min_side, sig};
  }
  std::vector<ExtremeRow> out;
  for (auto& [n, row] : best) out.push_back(row);
  return out;
}

std::vector<PerfectRow> perfect_report(const DissectionStore& store) {
  std::map<int, std::int64_t> counts;
  for (int n = 4; n <= store.max_size; ++n) {
    if (n != 5) counts[n] = 0;
  }
  for (const auto& [sig, rec] : store.records()) {
    if (rec.perfect) ++counts[rec.size];
  }
  std::vector<PerfectRow> out;
  for (auto& [n, c] : counts) out.push_back({n, c});
  return out;
}

std::vector<SizeSetRow> missing_own_size_report(std::span<const BitradeSizes> sizes) {
  std::map<std::pair<int, std::set<int>>, SizeSetRow> rows;
  for (const auto& s : sizes) {
    const auto& reached = s.sizes.vertex_sizes;
    if (reached.contains(s.size)) continue;
    const SourceRef ref{s.bitrade, s.swapped, -1};
    auto [it, inserted] = rows.try_emplace({s.size, reached}, SizeSetRow{s.size, reached, ref, 0});
    it->second.example = std::min(it->second.example, ref);
    ++it->second.bitrades;
  }
  std::vector<SizeSetRow> out;
  for (auto& [key, row] : rows) out.push_back(row);
  return out;
}

}  // namespace tridiss
