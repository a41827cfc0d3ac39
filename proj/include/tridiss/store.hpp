#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tridiss/enumerate.hpp"

namespace tridiss {

class StoreFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One tab-separated line: size, automorphisms, separated, perfect, trivial,
// scale, max side, min side, sources, witness, signature.
std::string format_record_line(const std::string& signature, const DissectionRecord& record);
std::pair<std::string, DissectionRecord> parse_record_line(const std::string& line);

// Shard of a record inside its size directory.
int record_shard(const std::string& signature);
inline constexpr int kShardCount = 16;

// Layout:
//   manifest.json
//   segments/n<size>/shard-<hh>.tsv   records sorted by signature
//   bitrade_sizes.tsv                 index, size, dissection sizes, provenance
// Any previous segments directory is replaced.
void save_store(const std::filesystem::path& dir, const DissectionStore& store, const nlohmann::ordered_json& manifest,
                std::span<const BitradeSizes> sizes = {}, std::span<const std::string> provenance = {});

struct LoadedStore {
  DissectionStore store;
  nlohmann::ordered_json manifest;
  std::vector<BitradeSizes> sizes;
};

LoadedStore load_store(const std::filesystem::path& dir);

struct StoreIssue {
  std::string invariant;  // e.g. "canonical-signature", "shard-placement"
  std::string where;      // file:line
  std::string detail;
};

// Re-derives every record from its signature and checks layout, ordering,
// field agreement and the manifest record count.
std::vector<StoreIssue> verify_store(const std::filesystem::path& dir);

}  // namespace tridiss
