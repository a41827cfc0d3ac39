#include "tridiss/store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "tridiss/hash.hpp"
#include "tridiss/solver.hpp"

namespace tridiss {

namespace fs = std::filesystem;

std::string format_record_line(const std::string& signature, const DissectionRecord& r) {
  std::ostringstream os;
  os << r.size << '\t' << r.automorphisms << '\t' << r.separated << '\t' << r.perfect << '\t' << r.trivial << '\t'
     << r.scale << '\t' << r.max_side << '\t' << r.min_side << '\t' << r.sources << '\t' << r.witness.to_string()
     << '\t' << signature;
  return os.str();
}

std::pair<std::string, DissectionRecord> parse_record_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (fields.size() != 11) {
    throw StoreFormatError("expected 11 tab-separated fields, found " + std::to_string(fields.size()));
  }
  auto integer = [&](std::size_t k) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(fields[k], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != fields[k].size()) throw StoreFormatError("field " + std::to_string(k + 1) + " is not an integer");
    return v;
  };
  auto flag = [&](std::size_t k) {
    const auto v = integer(k);
    if (v != 0 && v != 1) throw StoreFormatError("field " + std::to_string(k + 1) + " is not 0/1");
    return v == 1;
  };
  DissectionRecord r;
  r.size = static_cast<int>(integer(0));
  r.automorphisms = static_cast<int>(integer(1));
  r.separated = flag(2);
  r.perfect = flag(3);
  r.trivial = flag(4);
  r.scale = integer(5);
  r.max_side = integer(6);
  r.min_side = integer(7);
  r.sources = static_cast<std::uint64_t>(integer(8));
  try {
    r.witness = SourceRef::parse(fields[9]);
  } catch (const std::invalid_argument& e) {
    throw StoreFormatError(e.what());
  }
  if (fields[10].empty()) throw StoreFormatError("empty signature");
  return {fields[10], r};
}

int record_shard(const std::string& signature) {
  return static_cast<int>(content_hash64(signature) % kShardCount);
}

void save_store(const fs::path& dir, const DissectionStore& store, const nlohmann::ordered_json& manifest,
                std::span<const BitradeSizes> sizes, std::span<const std::string> provenance) {
  fs::create_directories(dir);
  fs::remove_all(dir / "segments");

  std::map<std::pair<int, int>, std::vector<std::string>> segments;
  for (const auto& [sig, rec] : store.records()) {
    segments[{rec.size, record_shard(sig)}].push_back(format_record_line(sig, rec));
  }
  for (const auto& [key, lines] : segments) {
    char name[32];
    std::snprintf(name, sizeof name, "n%02d", key.first);
    const fs::path sub = dir / "segments" / name;
    fs::create_directories(sub);
    std::snprintf(name, sizeof name, "shard-%02x.tsv", key.second);
    std::ofstream out(sub / name, std::ios::binary);
    // map iteration already yields signature order within a shard
    for (const auto& line : lines) out << line << '\n';
    if (!out) throw std::runtime_error("failed writing " + (sub / name).string());
  }

  {
    std::ofstream out(dir / "bitrade_sizes.tsv", std::ios::binary);
    auto join = [](const std::set<int>& values) {
      std::string text;
      for (int n : values) text += (text.empty() ? "" : ",") + std::to_string(n);
      return text.empty() ? std::string("-") : text;
    };
    for (const auto& s : sizes) {
      const bool known = s.bitrade >= 0 && static_cast<std::size_t>(s.bitrade) < provenance.size();
      out << s.bitrade << '\t' << (s.swapped ? '^' : '*') << '\t' << s.size << '\t' << join(s.sizes.pieces) << '\t'
          << join(s.sizes.vertex_sizes) << '\t' << (known ? provenance[s.bitrade] : "-") << '\n';
    }
  }

  nlohmann::ordered_json m = manifest;
  m["records"] = store.size();
  m["max_size"] = store.max_size;
  m["source_counts"] = store.counted_sources;
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  out << m.dump(2) << '\n';
}

LoadedStore load_store(const fs::path& dir) {
  LoadedStore loaded;
  const fs::path manifest_path = dir / "manifest.json";
  std::ifstream min(manifest_path);
  if (!min) throw StoreFormatError("missing " + manifest_path.string());
  try {
    loaded.manifest = nlohmann::ordered_json::parse(min);
    loaded.store.max_size = loaded.manifest.at("max_size").get<int>();
    loaded.store.counted_sources = loaded.manifest.value("source_counts", false);
  } catch (const nlohmann::json::exception& e) {
    throw StoreFormatError(manifest_path.string() + ": " + e.what());
  }

  std::vector<fs::path> files;
  if (fs::exists(dir / "segments")) {
    for (const auto& entry : fs::recursive_directory_iterator(dir / "segments")) {
      if (entry.is_regular_file() && entry.path().extension() == ".tsv") files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        auto [sig, rec] = parse_record_line(line);
        loaded.store.insert(sig, rec);
      } catch (const std::exception& e) {
        throw StoreFormatError(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  std::ifstream sin(dir / "bitrade_sizes.tsv");
  std::string line;
  int line_no = 0;
  auto split = [](const std::string& list) {
    std::set<int> values;
    if (list == "-") return values;
    std::istringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) values.insert(std::stoi(item));
    return values;
  };
  while (std::getline(sin, line)) {
    ++line_no;
    std::istringstream fields(line);
    BitradeSizes s;
    std::string order, pieces, vertices;
    if (!(fields >> s.bitrade >> order >> s.size >> pieces >> vertices) || (order != "*" && order != "^")) {
      throw StoreFormatError("bitrade_sizes.tsv:" + std::to_string(line_no) + ": malformed line");
    }
    s.swapped = order == "^";
    try {
      s.sizes = {split(pieces), split(vertices)};
    } catch (const std::exception&) {
      throw StoreFormatError("bitrade_sizes.tsv:" + std::to_string(line_no) + ": malformed size list");
    }
    loaded.sizes.push_back(std::move(s));
  }
  return loaded;
}

std::vector<StoreIssue> verify_store(const fs::path& dir) {
  std::vector<StoreIssue> issues;
  nlohmann::ordered_json manifest;
  {
    std::ifstream in(dir / "manifest.json");
    if (!in) return {{"manifest", (dir / "manifest.json").string(), "missing"}};
    try {
      manifest = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      return {{"manifest", (dir / "manifest.json").string(), e.what()}};
    }
  }

  std::size_t records = 0;
  std::vector<fs::path> files;
  if (fs::exists(dir / "segments")) {
    for (const auto& entry : fs::recursive_directory_iterator(dir / "segments")) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    int size_dir = -1, shard = -1;
    std::sscanf(file.parent_path().filename().string().c_str(), "n%d", &size_dir);
    std::sscanf(file.filename().string().c_str(), "shard-%x.tsv", &shard);
    std::ifstream in(file, std::ios::binary);
    std::string line, previous;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string where = file.string() + ":" + std::to_string(line_no);
      std::pair<std::string, DissectionRecord> parsed;
      try {
        parsed = parse_record_line(line);
      } catch (const StoreFormatError& e) {
        issues.push_back({"line-format", where, e.what()});
        continue;
      }
      ++records;
      const auto& [sig, rec] = parsed;
      if (!previous.empty() && !(previous < sig)) issues.push_back({"sorted-order", where, "signatures out of order"});
      previous = sig;
      if (rec.size != size_dir || record_shard(sig) != shard) {
        issues.push_back({"shard-placement", where, "record belongs in another segment"});
      }
      try {
        const Dissection d = parse_signature(sig);
        validate_dissection(d, true);
        if (canonical_signature(d).text != sig) {
          issues.push_back({"canonical-signature", where, "signature is not the orbit minimum"});
          continue;
        }
        DissectionRecord derived = analyze(d);
        derived.witness = rec.witness;
        derived.sources = rec.sources;
        if (!(derived == rec)) issues.push_back({"record-fields", where, "stored fields differ from re-derived ones"});
      } catch (const std::exception& e) {
        issues.push_back({"dissection-valid", where, e.what()});
      }
    }
  }
  if (manifest.value("records", std::size_t{0}) != records) {
    issues.push_back({"manifest-records", (dir / "manifest.json").string(),
                      "manifest lists " + std::to_string(manifest.value("records", std::size_t{0})) + " records, found " +
                          std::to_string(records)});
  }
  return issues;
}

}  // namespace tridiss
