#pragma once

#include <span>
#include <string>

#include "tridiss/enumerate.hpp"

namespace tridiss {

enum class ReportFormat { Csv, Json };

// Column orders are fixed:
//   counts      n,dissections,A(n,1),A(n,2),A(n,3),A(n,6),separated,nonseparated,perfect,trivial
//   perfect     n,perfect
//   extremes    n,max_side,min_side,signature
//   sizes       n,sizes,example,order,bitrades
//   asymptotics n,d_n,e_n,mu_n
std::string format_counts(const CountsTable& table, ReportFormat format);
std::string format_perfect(std::span<const PerfectRow> rows, ReportFormat format);
std::string format_extremes(std::span<const ExtremeRow> rows, ReportFormat format);
std::string format_size_sets(std::span<const SizeSetRow> rows, ReportFormat format);
std::string format_asymptotics(std::span<const AsymptoticsRow> rows, ReportFormat format);

}  // namespace tridiss
