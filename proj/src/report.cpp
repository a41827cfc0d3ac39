#include "tridiss/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace tridiss {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& rows) { return rows.dump(2) + "\n"; }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join_sizes(const std::set<int>& sizes, char sep) {
  std::string out;
  for (int n : sizes) {
    if (!out.empty()) out += sep;
    out += std::to_string(n);
  }
  return out;
}

}  // namespace

std::string format_counts(const CountsTable& table, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"n", r.n},
                      {"dissections", r.total},
                      {"A(n,1)", r.by_automorphism[0]},
                      {"A(n,2)", r.by_automorphism[1]},
                      {"A(n,3)", r.by_automorphism[2]},
                      {"A(n,6)", r.by_automorphism[3]},
                      {"separated", r.separated},
                      {"nonseparated", r.nonseparated},
                      {"perfect", r.perfect},
                      {"trivial", r.trivial}});
    }
    return dump(rows);
  }
  std::ostringstream os;
  os << "n,dissections,A(n,1),A(n,2),A(n,3),A(n,6),separated,nonseparated,perfect,trivial\n";
  for (const auto& r : table.rows) {
    os << r.n << ',' << r.total;
    for (auto a : r.by_automorphism) os << ',' << a;
    os << ',' << r.separated << ',' << r.nonseparated << ',' << r.perfect << ',' << r.trivial << '\n';
  }
  return os.str();
}

std::string format_perfect(std::span<const PerfectRow> rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) out.push_back({{"n", r.n}, {"perfect", r.perfect}});
    return dump(out);
  }
  std::ostringstream os;
  os << "n,perfect\n";
  for (const auto& r : rows) os << r.n << ',' << r.perfect << '\n';
  return os.str();
}

std::string format_extremes(std::span<const ExtremeRow> rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
      out.push_back({{"n", r.n}, {"max_side", r.max_side}, {"min_side", r.min_side}, {"signature", r.signature}});
    }
    return dump(out);
  }
  std::ostringstream os;
  os << "n,max_side,min_side,signature\n";
  for (const auto& r : rows) os << r.n << ',' << r.max_side << ',' << r.min_side << ',' << r.signature << '\n';
  return os.str();
}

std::string format_size_sets(std::span<const SizeSetRow> rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
      out.push_back({{"n", r.n},
                     {"sizes", r.sizes},
                     {"example", r.example.bitrade},
                     {"order", r.example.swapped ? "^" : "*"},
                     {"bitrades", r.bitrades}});
    }
    return dump(out);
  }
  std::ostringstream os;
  os << "n,sizes,example,order,bitrades\n";
  for (const auto& r : rows) {
    os << r.n << ",\"" << join_sizes(r.sizes, ' ') << "\"," << r.example.bitrade << ','
       << (r.example.swapped ? '^' : '*') << ',' << r.bitrades << '\n';
  }
  return os.str();
}

std::string format_asymptotics(std::span<const AsymptoticsRow> rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) out.push_back({{"n", r.n}, {"d_n", r.d}, {"e_n", r.e}, {"mu_n", r.mu}});
    return dump(out);
  }
  std::ostringstream os;
  os << "n,d_n,e_n,mu_n\n";
  for (const auto& r : rows) os << r.n << ',' << r.d << ',' << fixed(r.e, 4) << ',' << fixed(r.mu, 4) << '\n';
  return os.str();
}

}  // namespace tridiss
