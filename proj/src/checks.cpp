#include "tridiss/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tridiss/generate.hpp"
#include "tridiss/geometry.hpp"
#include "tridiss/grid_oracle.hpp"
#include "tridiss/ingest.hpp"
#include "tridiss/reference.hpp"
#include "tridiss/solver.hpp"
#include "tridiss/store.hpp"

namespace tridiss::checks {

namespace {

CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), true, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

template <class F>
CheckResult run(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(name, std::string("exception: ") + e.what());
  }
}

// Every (oriented bitrade, anchor) of the internal bitrades up to max_size.
template <class F>
void for_each_pointed(int max_size, F&& f) {
  for (const auto& src : internal_bitrades(max_size)) {
    for (const Bitrade& b : {src.bitrade, swap(src.bitrade)}) {
      for (const Triple& a : b.t_star()) f(src, b, a);
    }
  }
}

}  // namespace

std::vector<CheckResult> axioms(int max_vertices) {
  std::vector<CheckResult> out;
  out.push_back(run("reference-bitrades-revalidate", [] {
    const std::vector<std::pair<std::string, Bitrade>> refs = {
        {"intercalate", reference::intercalate()},
        {"spherical", reference::spherical_example()},
        {"pointed", reference::pointed_example()},
        {"degree-six", reference::degree_six_example()},
        {"cyclic-3", reference::cyclic_bitrade(3)},
        {"cyclic-5", reference::cyclic_bitrade(5)}};
    for (const auto& [name, b] : refs) Bitrade::validate(b.t_star(), b.t_delta());
    return pass("reference-bitrades-revalidate", std::to_string(refs.size()) + " bitrades");
  }));
  out.push_back(run("reference-genus", [] {
    const int g0 = genus(reference::spherical_example());
    const int g1 = genus(reference::cyclic_bitrade(3));
    if (g0 != 0 || g1 != 1) {
      return fail("reference-genus", "spherical example " + std::to_string(g0) + ", cyclic Z3 " + std::to_string(g1));
    }
    return pass("reference-genus");
  }));
  out.push_back(run("generated-bitrades", [max_vertices] {
    const auto levels = eulerian_triangulations(max_vertices);
    std::size_t count = 0;
    for (std::size_t v = 0; v < levels.size(); ++v) {
      for (const auto& g : levels[v]) {
        const Bitrade b = triangulation_to_bitrade(g);
        Bitrade::validate(b.t_star(), b.t_delta());
        if (b.size() != static_cast<int>(v) - 2 || genus(b) != 0 || !is_separated_bitrade(b)) {
          return fail("generated-bitrades", "bad bitrade from a " + std::to_string(v) + "-vertex triangulation");
        }
        ++count;
      }
    }
    return pass("generated-bitrades", std::to_string(count) + " bitrades");
  }));
  out.push_back(run("generator-vs-brute-force", [max_vertices] {
    const int bound = std::min(max_vertices, 12);
    const auto levels = eulerian_triangulations(bound);
    std::set<std::vector<std::uint8_t>> expanded, brute;
    for (const auto& level : levels)
      for (const auto& g : level) expanded.insert(canonical_code(g));
    for (const auto& g : brute_force_eulerian_triangulations(bound)) brute.insert(canonical_code(g));
    if (expanded != brute) return fail("generator-vs-brute-force", "classes differ");
    return pass("generator-vs-brute-force", std::to_string(brute.size()) + " classes up to " + std::to_string(bound));
  }));
  return out;
}

std::vector<CheckResult> solver(int max_size) {
  std::vector<CheckResult> out;
  out.push_back(run("pointed-example-values", [] {
    const auto sol = solve_exact(build_equations(reference::pointed_example(), reference::kPointedExampleAnchor));
    const std::array<std::vector<std::string>, 3> expected = {{{"0/1", "2/7", "5/14", "4/7"},
                                                              {"0/1", "3/14", "5/14", "3/7", "5/7"},
                                                              {"5/14", "4/7", "5/7", "11/14", "1/1"}}};
    for (int k = 0; k < 3; ++k) {
      std::vector<std::string> got;
      for (const auto& [label, v] : sol.values[k]) got.push_back(to_string(v));
      if (got != expected[k]) return fail("pointed-example-values", "coordinate " + std::to_string(k) + " differs");
    }
    return pass("pointed-example-values");
  }));
  out.push_back(run("cyclic-z3-inconsistent", [] {
    const Bitrade b = reference::cyclic_bitrade(3);
    try {
      solve_exact(build_equations(b, b.t_star()[0]));
    } catch (const InconsistentSystem&) {
      return pass("cyclic-z3-inconsistent");
    }
    return fail("cyclic-z3-inconsistent", "system solved");
  }));
  out.push_back(run("all-pointed-solutions", [max_size] {
    std::size_t solved = 0;
    std::string problem;
    for_each_pointed(max_size, [&](const SourceBitrade& src, const Bitrade& b, const Triple& a) {
      if (!problem.empty()) return;
      const Dissection d = dissection_from_solution(b, solve_exact(build_equations(b, a)), {true});
      if (!side_and_area_relations_hold(rescale_integer(d))) problem = src.provenance + " anchor " + to_string(a);
      ++solved;
    });
    if (!problem.empty()) return fail("all-pointed-solutions", "side/area relation fails for " + problem);
    return pass("all-pointed-solutions", std::to_string(solved) + " pointed bitrades");
  }));
  return out;
}

std::vector<CheckResult> geometry(int max_size) {
  std::vector<CheckResult> out;
  std::map<std::string, Dissection> dissections;
  for_each_pointed(max_size, [&](const SourceBitrade&, const Bitrade& b, const Triple& a) {
    Dissection d = dissection_from_solution(b, solve_exact(build_equations(b, a)), {false});
    if (d.size() <= max_size) dissections.emplace(canonical_signature(d).text, std::move(d));
  });
  out.push_back(run("symmetry-invariance", [&] {
    for (const auto& [sig, d] : dissections) {
      for (Symmetry s : kSymmetries) {
        const Dissection image = apply(s, d);
        validate_dissection(image, true);
        if (canonical_signature(image).text != sig) return fail("symmetry-invariance", "signature changed: " + sig);
      }
    }
    return pass("symmetry-invariance", std::to_string(dissections.size()) + " dissections");
  }));
  out.push_back(run("separated-round-trip", [&] {
    std::size_t checked = 0;
    for (const auto& [sig, d] : dissections) {
      if (!classify_separated(d)) continue;
      const PointedBitrade pb = recover_pointed_bitrade(d);
      const Dissection again = dissection_from_solution(pb.bitrade, solve_exact(build_equations(pb.bitrade, pb.anchor)));
      if (canonical_signature(again).text != sig) return fail("separated-round-trip", "mismatch for " + sig);
      ++checked;
    }
    return pass("separated-round-trip", std::to_string(checked) + " separated dissections");
  }));
  return out;
}

std::vector<std::string> pipeline_signatures_up_to_scale(const DissectionStore& store, int max_side) {
  std::vector<std::string> out;
  for (const auto& [sig, rec] : store.records()) {
    if (rec.scale <= max_side) out.push_back(sig);
  }
  return out;
}

std::vector<CheckResult> oracle(int max_side) {
  return {run("grid-oracle-equality", [max_side] {
    const auto sources = internal_bitrades(max_side * max_side);
    EnumerateOptions options;
    options.max_size = max_side * max_side;
    const auto result = enumerate_dissections(sources, options);
    const auto pipeline_list = pipeline_signatures_up_to_scale(result.store, max_side);
    const std::set<std::string> pipeline(pipeline_list.begin(), pipeline_list.end());
    const std::set<std::string> grid = oracle::grid_dissections_up_to(max_side);
    if (pipeline != grid) {
      std::ostringstream os;
      os << "pipeline " << pipeline.size() << " vs grid " << grid.size();
      return fail("grid-oracle-equality", os.str());
    }
    return pass("grid-oracle-equality", std::to_string(grid.size()) + " dissections of scale <= " +
                                           std::to_string(max_side));
  })};
}

std::vector<CheckResult> store(const std::filesystem::path& dir) {
  return {run("store-integrity", [&] {
    const auto issues = verify_store(dir);
    if (issues.empty()) return pass("store-integrity");
    const auto& first = issues.front();
    return fail("store-integrity", first.invariant + " at " + first.where + ": " + first.detail + " (" +
                                       std::to_string(issues.size()) + " issues)");
  })};
}

}  // namespace tridiss::checks
