#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trigfide/problems.hpp"

namespace trigfide {

/// One CSV line; unset optionals print as NA.
struct BenchRow {
  std::string kernel;
  std::string type;
  std::optional<double> gamma;
  std::string target;
  std::string metric;
  double value = 0.0;
  std::optional<int> q;
};

inline constexpr const char* kCsvHeader = "kernel,type,gamma,target,metric,value,q";

/// Six significant digits, scientific ("9.60000e-07").
std::string format_value(double v);
std::string format_row(const BenchRow& row);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// err_g and err_e of the 2-D interpolant on [2,3]^2 with delta = 1.
std::vector<BenchRow> bench_interp2d(const std::string& kernel, double gamma, int q, int q_probe = 10);

BenchRow row_for(const ErrorReport& report);
BenchRow bench_solve(const ManufacturedCase& c);
/// One row per q in [q_min, q_max]; empty when q_min > q_max.
std::vector<BenchRow> bench_sweep(ManufacturedCase c, int q_min, int q_max);

/// (x, v(x)) at the max_e probe points as "x,v" lines with a header.
void write_solution_dump(std::ostream& out, const SolutionSeries& sol, double s, double e, int q_probe = 10);

struct TableJob {
  std::string name;  ///< file stem, e.g. "table8"
  std::string title;
  std::function<std::vector<BenchRow>()> run;
};

/// Every reproducible table: 2, 3, 4 (interpolation) and 6 to 12 (solver).
std::vector<TableJob> table_jobs();

}  // namespace trigfide
