// trigfide: interpolation and FIDE solver benchmarks as CSV.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trigfide/bench.hpp"
#include "trigfide/error.hpp"

namespace fs = std::filesystem;
using namespace trigfide;

namespace {

enum Exit { kOk = 0, kNumerical = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ManufacturedCase load_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open case file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw UsageError(path + ": " + ex.what());
  }
  try {
    return case_from_json(doc);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

// CSV to `out_path` if given, else stdout
void emit(const std::vector<BenchRow>& rows, const std::string& out_path) {
  if (out_path.empty()) {
    write_csv(std::cout, rows);
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  write_csv(out, rows);
}

void check_level(int q, const char* name, int lo, int hi) {
  if (q < lo || q > hi) {
    std::ostringstream msg;
    msg << name << " must be in [" << lo << ", " << hi << "], got " << q;
    throw UsageError(msg.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric interpolation and FIDE collocation benchmarks"};
  app.require_subcommand(1);

  std::string kernel = "K1";
  double gamma = 0.5;
  int q = 7, q_probe = 10;
  std::string out_path;
  auto* interp = app.add_subcommand("interp2d", "2-D kernel interpolation errors on [2,3]^2");
  interp->add_option("--kernel", kernel, "K1, K2, Exp or Sin");
  interp->add_option("--gamma", gamma, "kernel exponent for K1/K2");
  interp->add_option("--q", q, "interpolation level (M = 2^q)");
  interp->add_option("--q-probe", q_probe, "probe mesh level");
  interp->add_option("--out", out_path, "CSV output file");

  std::string case_path, dump_path;
  std::optional<int> q_override;
  auto* solve = app.add_subcommand("solve", "solve one manufactured case and report max_e");
  solve->add_option("case", case_path, "JSON case document")->required();
  solve->add_option("--q", q_override, "override the case's q");
  solve->add_option("--dump-solution", dump_path, "write (x, v(x)) at the probe points");
  solve->add_option("--out", out_path, "CSV output file");

  int q_min = 4, q_max = 9;
  auto* sweep = app.add_subcommand("sweep", "max_e of a case over a range of q");
  sweep->add_option("case", case_path, "JSON case document")->required();
  sweep->add_option("--q-min", q_min, "first level");
  sweep->add_option("--q-max", q_max, "last level (at most 9)");
  sweep->add_option("--out", out_path, "CSV output file");

  std::string out_dir = "tables";
  std::vector<std::string> only;
  auto* tables = app.add_subcommand("tables", "rerun every reproducible table, one CSV each");
  tables->add_option("--out-dir", out_dir, "directory for tableN.csv files");
  tables->add_option("--only", only, "restrict to these tables (e.g. table8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*interp) {
      check_level(q, "--q", 2, 13);
      check_level(q_probe, "--q-probe", 2, 12);
      std::vector<BenchRow> rows;
      try {
        rows = bench_interp2d(kernel, gamma, q, q_probe);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      emit(rows, out_path);
    } else if (*solve) {
      ManufacturedCase c = load_case(case_path);
      if (q_override) c.q = *q_override;
      check_level(c.q, "q", 2, 12);
      FideSolution sol;
      const ErrorReport rep = run_case(c, sol);
      emit({row_for(rep)}, out_path);
      std::cerr << "path=" << to_string(rep.path) << " M=" << sol.grid.M << " max_e=" << format_value(rep.max_e)
                << " cond~" << format_value(1.0 / rep.rcond)
                << " gmap_check=" << format_value(rep.validation_deviation) << '\n';
      if (!dump_path.empty()) {
        std::ofstream dump(dump_path, std::ios::binary);
        if (!dump) throw UsageError("cannot write " + dump_path);
        write_solution_dump(dump, sol.series, c.s, c.e);
      }
    } else if (*sweep) {
      ManufacturedCase c = load_case(case_path);
      if (q_max > 9) throw UsageError("--q-max must be at most 9");
      if (q_min <= q_max) check_level(q_min, "--q-min", 2, 9);
      emit(bench_sweep(c, q_min, q_max), out_path);
    } else if (*tables) {
      auto jobs = table_jobs();
      for (const auto& name : only) {
        bool known = false;
        for (const auto& j : jobs) known = known || j.name == name;
        if (!known) throw UsageError("unknown table " + name);
      }
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) throw UsageError("cannot create " + out_dir + ": " + ec.message());
      for (const auto& job : jobs) {
        if (!only.empty() && std::find(only.begin(), only.end(), job.name) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = job.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const fs::path file = fs::path(out_dir) / (job.name + ".csv");
        emit(rows, file.string());
        std::cout << job.name << ": " << job.title << " (" << rows.size() << " rows, " << secs << " s) -> "
                  << file.string() << '\n';
        for (const auto& r : rows) std::cout << "  " << format_row(r) << '\n';
      }
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const StageError& ex) {
    std::cerr << "solver failed in stage '" << ex.stage() << "': " << ex.what() << '\n';
    return kNumerical;
  } catch (const trigfide::Error& ex) {
    std::cerr << "numerical error: " << ex.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kOk;
}
