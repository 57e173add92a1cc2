#include "trigfide/bench.hpp"

#include <cmath>
#include <cstdio>

#include "trigfide/interp2d.hpp"

namespace trigfide {

std::string format_value(double v) {
  if (std::isnan(v)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string format_row(const BenchRow& row) {
  auto label = [](const std::string& s) { return s.empty() ? std::string("NA") : s; };
  std::string out;
  out += label(row.kernel) + ',';
  out += label(row.type) + ',';
  out += (row.gamma ? format_value(*row.gamma) : std::string("NA")) + ',';
  out += label(row.target) + ',';
  out += label(row.metric) + ',';
  out += format_value(row.value) + ',';
  out += row.q ? std::to_string(*row.q) : std::string("NA");
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << format_row(r) << '\n';
}

std::vector<BenchRow> bench_interp2d(const std::string& kernel, double gamma, int q, int q_probe) {
  const KernelSpec spec = make_kernel(kernel, gamma);
  const CutoffSpec frame(2.0, 3.0, 1.0);
  const SineSeries2D series = interpolate_2d(spec.k, frame, frame, q, q);
  const InterpolationErrors err = error_metrics(series, spec.k, q_probe);
  std::optional<double> g;
  if (kernel_uses_gamma(spec.label)) g = gamma;
  return {BenchRow{spec.label, "", g, "", "err_g", err.err_g, q},
          BenchRow{spec.label, "", g, "", "err_e", err.err_e, q}};
}

BenchRow row_for(const ErrorReport& report) {
  const auto& c = report.c;
  std::optional<double> g;
  if (kernel_uses_gamma(c.kernel)) g = c.gamma;
  return BenchRow{c.kernel, to_string(c.bc_type), g, c.target, "max_e", report.max_e, report.q};
}

BenchRow bench_solve(const ManufacturedCase& c) { return row_for(run_case(c)); }

std::vector<BenchRow> bench_sweep(ManufacturedCase c, int q_min, int q_max) {
  std::vector<BenchRow> rows;
  for (int q = q_min; q <= q_max; ++q) {
    c.q = q;
    rows.push_back(bench_solve(c));
  }
  return rows;
}

void write_solution_dump(std::ostream& out, const SolutionSeries& sol, double s, double e, int q_probe) {
  const std::size_t count = std::size_t{1} << q_probe;
  const double step = sol.b / static_cast<double>(count);
  const double tol = 1e-12 * sol.b;
  out << "x,v\n";
  for (std::size_t k = 0; k <= count; ++k) {
    const double x = sol.o + static_cast<double>(k) * step;
    if (x < s - tol || x > e + tol) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e,%.16e\n", x, eval_solution(sol, x));
    out << buf;
  }
}

namespace {

ManufacturedCase base_case(const std::string& kernel, double gamma, BcType bc, int q) {
  ManufacturedCase c;
  c.kernel = kernel;
  c.gamma = kernel_uses_gamma(kernel) ? gamma : 0.0;
  c.bc_type = bc;
  c.q = q;
  return c;
}

}  // namespace

std::vector<TableJob> table_jobs() {
  std::vector<TableJob> jobs;
  jobs.push_back({"table2", "2-D interpolation of K1", [] {
                    std::vector<BenchRow> rows;
                    for (double g : {0.5, 1.5, 2.5})
                      for (int q = 6; q <= 9; ++q)
                        for (auto& r : bench_interp2d("K1", g, q)) rows.push_back(r);
                    return rows;
                  }});
  jobs.push_back({"table3", "2-D interpolation, K1 against K2", [] {
                    std::vector<BenchRow> rows;
                    for (double g : {0.5, 1.5, 2.5})
                      for (const char* k : {"K1", "K2"})
                        for (auto& r : bench_interp2d(k, g, 7)) rows.push_back(r);
                    return rows;
                  }});
  jobs.push_back({"table4", "2-D interpolation of the four kernels", [] {
                    std::vector<BenchRow> rows;
                    for (const char* k : {"K1", "K2", "Exp", "Sin"})
                      for (auto& r : bench_interp2d(k, 0.5, 7)) rows.push_back(r);
                    return rows;
                  }});
  jobs.push_back({"table6", "continuous kernels, Dirichlet, cos(3*pi*x/2)", [] {
                    std::vector<BenchRow> rows;
                    for (const char* k : {"K1", "K2", "Exp", "Sin"}) {
                      auto c = base_case(k, 0.5, BcType::Dirichlet, 7);
                      c.path = KernelPath::Continuous;
                      rows.push_back(bench_solve(c));
                    }
                    return rows;
                  }});
  jobs.push_back({"table7", "boundary conditions, continuous K1", [] {
                    std::vector<BenchRow> rows;
                    for (BcType bc : {BcType::Neumann, BcType::Dirichlet, BcType::Mix1, BcType::Mix2}) {
                      auto c = base_case("K1", 0.5, bc, 7);
                      c.path = KernelPath::Continuous;
                      rows.push_back(bench_solve(c));
                    }
                    return rows;
                  }});
  jobs.push_back({"table8", "convergence, continuous K1", [] {
                    auto c = base_case("K1", 0.5, BcType::Dirichlet, 4);
                    c.path = KernelPath::Continuous;
                    return bench_sweep(c, 4, 8);
                  }});
  jobs.push_back({"table9", "kernel smoothness, singular path", [] {
                    std::vector<BenchRow> rows;
                    for (double g : {-0.9, -0.5, 0.0, 0.5, 1.5, 2.0}) {
                      auto c = base_case("K1", g, BcType::Dirichlet, 7);
                      c.path = KernelPath::Singular;
                      rows.push_back(bench_solve(c));
                    }
                    return rows;
                  }});
  jobs.push_back({"table10", "convergence, singular K1", [] {
                    return bench_sweep(base_case("K1", -0.5, BcType::Dirichlet, 4), 4, 9);
                  }});
  jobs.push_back({"table11", "boundary conditions, singular K1", [] {
                    std::vector<BenchRow> rows;
                    for (BcType bc : {BcType::Neumann, BcType::Dirichlet, BcType::Mix1, BcType::Mix2})
                      rows.push_back(bench_solve(base_case("K1", -0.5, bc, 7)));
                    return rows;
                  }});
  jobs.push_back({"table12", "target functions, singular K1", [] {
                    std::vector<BenchRow> rows;
                    for (const auto& t : target_catalog()) {
                      auto c = base_case("K1", -0.5, BcType::Dirichlet, 7);
                      c.target = t.label;
                      rows.push_back(bench_solve(c));
                    }
                    return rows;
                  }});
  return jobs;
}

}  // namespace trigfide
