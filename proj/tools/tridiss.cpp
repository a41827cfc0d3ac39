// tridiss: enumerate equilateral triangle dissections from planar Eulerian
// triangulations.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tridiss/checks.hpp"
#include "tridiss/enumerate.hpp"
#include "tridiss/generate.hpp"
#include "tridiss/geometry.hpp"
#include "tridiss/hash.hpp"
#include "tridiss/ingest.hpp"
#include "tridiss/planar.hpp"
#include "tridiss/render.hpp"
#include "tridiss/report.hpp"
#include "tridiss/solver.hpp"
#include "tridiss/store.hpp"

namespace fs = std::filesystem;
using namespace tridiss;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvariant = 3,
  kIncomplete = 4,
  kUnknownSignature = 5,
};

struct Failure {
  int code;
  std::string message;
};

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Triple lists start with a comment or a '*' marker; anything else is
// treated as planar_code, with or without its header.
bool looks_like_planar_code(const std::vector<std::uint8_t>& bytes) {
  const auto first = std::find_if(bytes.begin(), bytes.end(), [](std::uint8_t c) { return !std::isspace(c); });
  return first != bytes.end() && *first != '#' && *first != '*';
}

std::vector<EmbeddedGraph> parse_graphs(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  try {
    return parse_planar_code(bytes);
  } catch (const PlanarCodeError& e) {
    throw Failure{kParse, path + ": " + e.what()};
  }
}

Bitrade convert_graph(const std::string& provenance, const EmbeddedGraph& g) {
  try {
    return triangulation_to_bitrade(g);
  } catch (const std::runtime_error& e) {
    throw Failure{kParse, provenance + ": " + e.what()};
  }
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int max_vertices = 12;
  std::string out = ".";
  std::string method = "expand";
};

int cmd_generate(const GenerateArgs& args) {
  std::vector<std::vector<EmbeddedGraph>> levels;
  if (args.method == "brute") {
    levels.resize(args.max_vertices + 1);
    for (auto& g : brute_force_eulerian_triangulations(args.max_vertices)) levels[g.vertex_count].push_back(g);
  } else {
    levels = eulerian_triangulations(args.max_vertices);
  }
  fs::create_directories(args.out);
  for (std::size_t v = 6; v < levels.size(); ++v) {
    char name[32];
    std::snprintf(name, sizeof name, "eulerian_v%02zu.pc", v);
    std::ofstream out(fs::path(args.out) / name, std::ios::binary);
    write_planar_code(out, levels[v]);
    std::cout << name << '\t' << levels[v].size() << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- convert

struct ConvertArgs {
  std::vector<std::string> inputs;
  std::string out;
};

int cmd_convert(const ConvertArgs& args) {
  std::ostringstream text;
  for (const auto& path : args.inputs) {
    const auto bytes = read_bytes(path);
    const auto graphs = parse_graphs(path, bytes);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::string provenance = path + "#" + std::to_string(i + 1);
      write_triple_list(text, convert_graph(provenance, graphs[i]), provenance);
    }
  }
  if (args.out.empty() || args.out == "-") {
    std::cout << text.str();
  } else {
    std::ofstream(args.out, std::ios::binary) << text.str();
  }
  return kOk;
}

// --------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int max_size = 13;
  std::vector<std::string> inputs;
  bool generate = false;
  std::string out;
  std::string class_filter = "all";
  int workers = 1;
  bool perfect_only = false;
  bool source_counts = false;
  bool pairwise_checks = false;
};

int cmd_enumerate(const EnumerateArgs& args) {
  if (args.inputs.empty() && !args.generate) throw Failure{kUsage, "give --input files or --generate"};

  std::vector<SourceBitrade> sources;
  std::set<int> vertex_counts;
  std::size_t skipped = 0;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  auto add = [&](Bitrade b, std::string provenance) {
    if (b.size() > args.max_size) {
      ++skipped;
      return;
    }
    vertex_counts.insert(b.size() + 2);
    sources.push_back({std::move(b), std::move(provenance)});
  };

  for (const auto& path : args.inputs) {
    const auto bytes = read_bytes(path);
    const std::string_view content(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    std::size_t records = 0;
    if (looks_like_planar_code(bytes)) {
      const auto graphs = parse_graphs(path, bytes);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const std::string provenance = fs::path(path).filename().string() + "#" + std::to_string(i + 1);
        add(convert_graph(provenance, graphs[i]), provenance);
      }
      records = graphs.size();
    } else {
      std::istringstream in{std::string(content)};
      std::vector<BitradeRecord> parsed;
      try {
        parsed = read_triple_list(in);
      } catch (const std::exception& e) {
        throw Failure{kParse, path + ": " + e.what()};
      }
      for (std::size_t i = 0; i < parsed.size(); ++i) {
        const std::string provenance = fs::path(path).filename().string() + "#" + std::to_string(i + 1);
        if (genus(parsed[i].bitrade) != 0 || !is_separated_bitrade(parsed[i].bitrade)) {
          throw Failure{kInvariant, provenance + ": bitrade is not spherical and separated"};
        }
        add(parsed[i].bitrade, provenance);
      }
      records = parsed.size();
    }
    inputs.push_back({{"path", fs::path(path).filename().string()},
                      {"fnv1a64", hex64(content_hash64(content))},
                      {"records", records}});
  }
  if (args.generate) {
    for (auto& src : internal_bitrades(args.max_size)) add(std::move(src.bitrade), std::move(src.provenance));
    for (int v = 6; v <= args.max_size + 2; ++v) {
      if (v != 7) vertex_counts.insert(v);
    }
  }

  // Bitrade sizes 4..max_size; no Eulerian triangulation has 7 vertices.
  std::vector<int> missing;
  for (int v = 6; v <= args.max_size + 2; ++v) {
    if (v != 7 && !vertex_counts.count(v)) missing.push_back(v);
  }

  EnumerateOptions options;
  options.max_size = args.max_size;
  options.workers = args.workers;
  options.class_filter = args.class_filter == "separated" ? ClassFilter::Separated : ClassFilter::All;
  options.perfect_only = args.perfect_only;
  options.source_counting = args.source_counts;
  options.pairwise_checks = args.pairwise_checks;

  EnumerationResult result;
  try {
    result = enumerate_dissections(sources, options);
  } catch (const EnumerationError& e) {
    throw Failure{kInvariant, e.what()};
  }

  nlohmann::ordered_json manifest;
  manifest["format"] = "tridiss-store-1";
  manifest["parameters"] = {{"max_size", args.max_size},
                            {"class", args.class_filter},
                            {"perfect_only", args.perfect_only},
                            {"source_counts", args.source_counts},
                            {"pairwise_checks", args.pairwise_checks}};
  manifest["inputs"] = inputs;
  manifest["internal_generator"] = args.generate;
  manifest["bitrades"] = sources.size();
  manifest["bitrades_above_max_size"] = skipped;
  manifest["completeness"] = {{"vertex_range", {6, args.max_size + 2}},
                              {"missing_vertex_counts", missing},
                              {"complete", missing.empty()}};

  std::vector<std::string> provenance;
  for (const auto& s : sources) provenance.push_back(s.provenance);
  save_store(args.out, result.store, manifest, result.sizes, provenance);

  std::cerr << result.store.size() << " dissections from " << sources.size() << " bitrades\n";
  if (!missing.empty()) {
    std::cerr << "warning: inputs do not cover vertex counts";
    for (int v : missing) std::cerr << ' ' << v;
    std::cerr << "; store is not marked complete\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ report

struct ReportArgs {
  std::string store;
  std::string kind = "counts";
  std::string format = "csv";
  std::string class_filter = "all";
  std::string key = "triangles";
  int max_size = 0;
};

LoadedStore open_store(const std::string& dir) {
  try {
    return load_store(dir);
  } catch (const StoreFormatError& e) {
    throw Failure{kParse, e.what()};
  }
}

int cmd_report(const ReportArgs& args) {
  const LoadedStore loaded = open_store(args.store);
  const ReportFormat format = args.format == "json" ? ReportFormat::Json : ReportFormat::Csv;
  const ClassFilter filter = args.class_filter == "separated" ? ClassFilter::Separated : ClassFilter::All;
  int code = kOk;

  const bool complete = loaded.manifest.contains("completeness") && loaded.manifest["completeness"].value("complete", false);
  if (!complete) std::cerr << "note: store inputs do not cover the full vertex range; counts are lower bounds\n";

  if (args.kind == "counts" || args.kind == "asymptotics") {
    const DissectionStore keyed = args.key == "vertices" ? collapse_by_vertex_list(loaded.store) : DissectionStore{};
    const CountsTable table = counts_report(args.key == "vertices" ? keyed : loaded.store, filter, args.max_size);
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
    if (!table.warnings.empty()) code = kIncomplete;
    if (args.kind == "counts") {
      std::cout << format_counts(table, format);
    } else {
      std::cout << format_asymptotics(asymptotics_report(table), format);
    }
  } else if (args.kind == "perfect") {
    std::cout << format_perfect(perfect_report(loaded.store), format);
  } else if (args.kind == "extremes") {
    std::cout << format_extremes(extremes_report(loaded.store), format);
  } else if (args.kind == "sizes-per-bitrade") {
    std::cout << format_size_sets(missing_own_size_report(loaded.sizes), format);
  }
  return code;
}

// ------------------------------------------------------------------ render

struct RenderArgs {
  std::string store;
  std::string signature;
  int size = 0;
  bool perfect_only = false;
  std::string format = "svg";
  std::string out;
};

int cmd_render(const RenderArgs& args) {
  std::string signature = args.signature;
  if (!args.store.empty()) {
    const LoadedStore loaded = open_store(args.store);
    if (!signature.empty()) {
      if (!loaded.store.find(signature)) throw Failure{kUnknownSignature, "signature not present in store"};
    } else {
      for (const auto& [sig, rec] : loaded.store.records()) {
        if ((args.size == 0 || rec.size == args.size) && (!args.perfect_only || rec.perfect)) {
          signature = sig;
          break;
        }
      }
      if (signature.empty()) throw Failure{kUnknownSignature, "no record matches the selection"};
    }
  } else if (signature.empty()) {
    throw Failure{kUsage, "give --signature or --store"};
  }

  Dissection d;
  try {
    d = parse_signature(signature);
    validate_dissection(d, true);
  } catch (const std::exception& e) {
    throw Failure{kParse, std::string("invalid signature: ") + e.what()};
  }
  const std::string figure = args.format == "tikz" ? render_tikz(d) : render_svg(d);
  if (args.out.empty() || args.out == "-") {
    std::cout << figure;
  } else {
    std::ofstream(args.out, std::ios::binary) << figure;
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string scope = "axioms";
  std::string store;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<checks::CheckResult> results;
  auto append = [&](std::vector<checks::CheckResult> more) {
    results.insert(results.end(), more.begin(), more.end());
  };
  const bool all = args.scope == "all";
  if (all || args.scope == "axioms") append(checks::axioms());
  if (all || args.scope == "solver") append(checks::solver());
  if (all || args.scope == "geometry") append(checks::geometry());
  if (all || args.scope == "oracle") append(checks::oracle());
  if (args.scope == "store" || (all && !args.store.empty())) {
    if (args.store.empty()) throw Failure{kUsage, "--scope store needs --store"};
    append(checks::store(args.store));
  }

  std::size_t failed = 0;
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    summary.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  std::cout << nlohmann::ordered_json{{"scope", args.scope},
                                      {"passed", results.size() - failed},
                                      {"failed", failed},
                                      {"checks", summary}}
                   .dump(2)
            << '\n';
  return failed ? kInvariant : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilateral triangle dissections from planar Eulerian triangulations"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write planar Eulerian triangulations as planar_code files");
  generate->add_option("--max-vertices", gen.max_vertices, "Largest vertex count")->check(CLI::Range(6, 40));
  generate->add_option("--out", gen.out, "Output directory");
  generate->add_option("--method", gen.method, "expand or brute (at most 12 vertices)")
      ->check(CLI::IsMember({"expand", "brute"}));

  ConvertArgs conv;
  auto* convert = app.add_subcommand("convert", "Convert planar_code triangulations to bitrade triple lists");
  convert->add_option("inputs", conv.inputs, "planar_code files, '-' for stdin")->required();
  convert->add_option("--out", conv.out, "Output file (default stdout)");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate dissections into a store directory");
  enumerate->add_option("--max-size", en.max_size, "Largest dissection size")->check(CLI::Range(4, 64));
  enumerate->add_option("--input", en.inputs, "planar_code or triple-list files")->check(CLI::ExistingFile);
  enumerate->add_flag("--generate", en.generate, "Use the internal triangulation generator");
  enumerate->add_option("--out", en.out, "Store directory")->required();
  enumerate->add_option("--class", en.class_filter, "separated or all")->check(CLI::IsMember({"separated", "all"}));
  enumerate->add_option("--workers", en.workers, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--perfect-only", en.perfect_only, "Keep perfect dissections only");
  enumerate->add_flag("--with-source-counts", en.source_counts, "Count (bitrade, order, anchor) sources");
  enumerate->add_flag("--pairwise-checks", en.pairwise_checks, "Check every triangle pair for overlap");

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Tabulate a store");
  report->add_option("--store", rep.store, "Store directory")->required();
  report->add_option("--kind", rep.kind, "Report kind")
      ->check(CLI::IsMember({"counts", "perfect", "extremes", "sizes-per-bitrade", "asymptotics"}));
  report->add_option("--format", rep.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--class", rep.class_filter, "separated or all")->check(CLI::IsMember({"separated", "all"}));
  report->add_option("--max-size", rep.max_size, "Largest size expected in the table");
  report->add_option("--key", rep.key, "Dedup key for counts: triangles (default) or vertices")
      ->check(CLI::IsMember({"triangles", "vertices"}));

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "Draw a dissection");
  render->add_option("--store", ren.store, "Store directory");
  render->add_option("--signature", ren.signature, "Canonical signature text");
  render->add_option("--size", ren.size, "Pick the least signature of this size from the store");
  render->add_flag("--perfect-only", ren.perfect_only, "Pick a perfect dissection");
  render->add_option("--format", ren.format, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
  render->add_option("--out", ren.out, "Output file (default stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--scope", ver.scope, "axioms, solver, geometry, oracle, store or all")
      ->check(CLI::IsMember({"axioms", "solver", "geometry", "oracle", "store", "all"}));
  verify->add_option("--store", ver.store, "Store directory for the store scope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*convert) return cmd_convert(conv);
    if (*enumerate) return cmd_enumerate(en);
    if (*report) return cmd_report(rep);
    if (*render) return cmd_render(ren);
    if (*verify) return cmd_verify(ver);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const BoundTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
