#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "tridiss/render.hpp"
#include "tridiss/report.hpp"

using namespace tridiss;
using test_support::intercalate_dissection;
using test_support::pointed_example_dissection;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("render_report") {
  TEST_CASE("svg of the intercalate") {
    const std::string svg = render_svg(intercalate_dissection(), 1);
    CHECK(svg.starts_with("<svg"));
    CHECK(count(svg, "<polygon") == 4);
    CHECK(count(svg, "class=\"up\"") == 3);
    CHECK(count(svg, "stroke-dasharray") == 1);
    // margin plus sqrt(3)/2 with 12 significant digits
    CHECK(svg.find("height=\"20.8660254038\"") != std::string::npos);
  }

  TEST_CASE("svg and tikz of the pointed example") {
    CHECK(count(render_svg(pointed_example_dissection()), "<polygon") == 12);
    const std::string tikz = render_tikz(pointed_example_dissection());
    CHECK(tikz.starts_with("\\begin{tikzpicture}"));
    CHECK(count(tikz, "\\draw") == 12);
    CHECK(count(tikz, "cycle;") == 12);
  }

  TEST_CASE("tikz coordinates use 12 significant digits") {
    const std::string tikz = render_tikz(intercalate_dissection());
    CHECK(tikz.find("(0.75,0.433012701892)") != std::string::npos);
    CHECK(tikz.find("(0.5,0.866025403784)") != std::string::npos);
  }

  TEST_CASE("counts csv and json") {
    CountsTable table;
    CountsRow row;
    row.n = 10;
    row.total = 23;
    row.by_automorphism = {15, 7, 0, 1};
    row.separated = 20;
    row.nonseparated = 3;
    table.rows.push_back(row);
    CHECK(format_counts(table, ReportFormat::Csv) ==
          "n,dissections,A(n,1),A(n,2),A(n,3),A(n,6),separated,nonseparated,perfect,trivial\n"
          "10,23,15,7,0,1,20,3,0,0\n");
    const auto json = nlohmann::ordered_json::parse(format_counts(table, ReportFormat::Json));
    REQUIRE(json.size() == 1);
    CHECK(json[0]["A(n,2)"] == 7);
    CHECK(json[0].begin().key() == "n");
    CHECK(format_counts({}, ReportFormat::Csv) ==
          "n,dissections,A(n,1),A(n,2),A(n,3),A(n,6),separated,nonseparated,perfect,trivial\n");
    CHECK(format_counts({}, ReportFormat::Json) == "[]\n");
  }

  TEST_CASE("other reports") {
    const std::vector<PerfectRow> perfect{{14, 0}, {15, 2}};
    CHECK(format_perfect(perfect, ReportFormat::Csv) == "n,perfect\n14,0\n15,2\n");
    const std::vector<ExtremeRow> extremes{{13, 12, 1, "sig"}};
    CHECK(format_extremes(extremes, ReportFormat::Csv) == "n,max_side,min_side,signature\n13,12,1,sig\n");
    const std::vector<SizeSetRow> sizes{{10, {4, 7}, {3, true, -1}, 1}};
    CHECK(format_size_sets(sizes, ReportFormat::Csv) == "n,sizes,example,order,bitrades\n10,\"4 7\",3,^,1\n");
    const std::vector<AsymptoticsRow> asym{{8, 3, 1.0, 1.0 / 3}};
    CHECK(format_asymptotics(asym, ReportFormat::Csv) == "n,d_n,e_n,mu_n\n8,3,1.0000,0.3333\n");
    const auto json = nlohmann::ordered_json::parse(format_size_sets(sizes, ReportFormat::Json));
    CHECK(json[0]["sizes"] == nlohmann::ordered_json::array({4, 7}));
  }
}
