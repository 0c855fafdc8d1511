// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// arrow3 CLI: solve matrices from a file, run the accuracy-comparison
// bench, and turn bench CSVs into sorted-difference series.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or input data error,
// 3 internal solver fault.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrow3/assembly.hpp"
#include "arrow3/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFault = 3;

arrow3::Method parse_method(const std::string& name) {
  if (name == "bg") return arrow3::Method::BorgesGragg;
  if (name == "newton") return arrow3::Method::Newton;
  throw CLI::ValidationError("--method", "expected 'bg' or 'newton'");
}

int cmd_solve(const std::string& in_path, const std::string& method_name) {
  const arrow3::Method method = parse_method(method_name);
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "arrow3: cannot open " << in_path << "\n";
    return kExitIo;
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    double a11, a12, a13, a22, a23, a33;
    if (!(fields >> a11 >> a12 >> a13 >> a22 >> a23 >> a33)) {
      std::cerr << "arrow3: line " << line_no << ": expected six reals a11 a12 a13 a22 a23 a33\n";
      return kExitIo;
    }
    try {
      arrow3::SolveConfig cfg;
      cfg.method = method;
      const arrow3::SymMat3 t(a11, a12, a13, a22, a23, a33);
      const arrow3::EigenDecomp3 e = arrow3::solve(t, cfg);
      std::cout << "lambda";
      for (double l : e.lambda) std::cout << ' ' << arrow3::format_double(l);
      std::cout << '\n';
      for (int r = 0; r < 3; ++r) {
        std::cout << 'v';
        for (int c = 0; c < 3; ++c) std::cout << ' ' << arrow3::format_double(e.V(r, c));
        std::cout << '\n';
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "arrow3: line " << line_no << ": " << e.what() << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

void print_metric(std::string_view name, const arrow3::MetricSummary& m) {
  std::cout << name << " max " << arrow3::format_double(m.max) << " median "
            << arrow3::format_double(m.median) << '\n';
}

int cmd_bench(const arrow3::RunConfig& cfg, bool serial) {
  const arrow3::RunResult result = arrow3::run_comparison(cfg, !serial);
  std::cout << "trials " << cfg.n_matrices << " dist " << arrow3::dist_name(cfg.dist) << " seed "
            << cfg.seed << " method "
            << (cfg.method == arrow3::Method::BorgesGragg ? "bg" : "newton") << '\n';
  print_metric("orth_main", result.summary.orth_main);
  print_metric("resid_main", result.summary.resid_main);
  print_metric("orth_base", result.summary.orth_base);
  print_metric("resid_base", result.summary.resid_base);
  std::cout << "wrote " << cfg.output_path << '\n';
  return kExitOk;
}

// Diff output paths share the input stem: X(.csv) -> X.orth.csv, X.resid.csv.
std::string diff_path(const std::string& out, const char* metric) {
  std::string stem = out;
  if (stem.size() > 4 && stem.ends_with(".csv")) stem.resize(stem.size() - 4);
  return stem + "." + metric + ".csv";
}

int cmd_diff(const std::string& in_path, const std::string& out_path) {
  const std::vector<arrow3::TrialRecord> records = arrow3::read_records_csv(in_path);
  if (records.empty()) {
    std::cerr << "arrow3: no records in " << in_path << "\n";
    return kExitIo;
  }
  const arrow3::SortedDifferences diffs = arrow3::sorted_differences(records);

  const std::string orth_path = diff_path(out_path, "orth");
  const std::string resid_path = diff_path(out_path, "resid");
  arrow3::write_diff_csv(orth_path, diffs.orth);
  arrow3::write_diff_csv(resid_path, diffs.resid);

  const auto positive = [](const std::vector<double>& v) {
    return std::count_if(v.begin(), v.end(), [](double d) { return d > 0.0; });
  };
  std::cout << "wrote " << orth_path << " and " << resid_path << '\n';
  std::cout << "orth: main more accurate in " << positive(diffs.orth) << "/" << diffs.orth.size()
            << " trials\n";
  std::cout << "resid: main more accurate in " << positive(diffs.resid) << "/"
            << diffs.resid.size() << " trials\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral factorization of 3x3 real symmetric matrices via arrow reduction"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve matrices listed in a file");
  std::string solve_in;
  std::string solve_method = "bg";
  solve_cmd->add_option("--in", solve_in, "Input file, one matrix per line: a11 a12 a13 a22 a23 a33")
      ->required();
  solve_cmd->add_option("--method", solve_method, "Zero finder: bg or newton");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run the accuracy-comparison protocol");
  std::string bench_dist;
  std::string bench_method = "bg";
  std::string bench_out;
  bool bench_serial = false;
  arrow3::RunConfig run_cfg;
  bench_cmd->add_option("--dist", bench_dist, "Distribution: uniform, normal, or chisq")
      ->required();
  bench_cmd->add_option("--n", run_cfg.n_matrices, "Number of test matrices (default 100000)");
  bench_cmd->add_option("--seed", run_cfg.seed, "RNG seed");
  bench_cmd->add_option("--method", bench_method, "Zero finder: bg or newton");
  bench_cmd->add_option("--out", bench_out, "Output CSV path")->required();
  bench_cmd->add_option("--c-deflate", run_cfg.c_deflate, "Deflation constant C");
  bench_cmd->add_option("--c-term", run_cfg.c_term, "Termination constant C");
  bench_cmd->add_flag("--serial", bench_serial, "Run the serial reference kernel");

  // diff
  auto* diff_cmd = app.add_subcommand("diff", "Sorted-difference series from a bench CSV");
  std::string diff_in, diff_out;
  diff_cmd->add_option("--in", diff_in, "Bench CSV")->required();
  diff_cmd->add_option("--out", diff_out, "Output stem; writes <stem>.orth.csv and <stem>.resid.csv")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_in, solve_method);
    if (bench_cmd->parsed()) {
      const auto dist = arrow3::dist_from_name(bench_dist);
      if (!dist) {
        std::cerr << "arrow3: unknown distribution '" << bench_dist << "'\n";
        return kExitUsage;
      }
      run_cfg.dist = *dist;
      run_cfg.method = parse_method(bench_method);
      run_cfg.output_path = bench_out;
      if (run_cfg.n_matrices < 1) {
        std::cerr << "arrow3: --n must be at least 1\n";
        return kExitUsage;
      }
      return cmd_bench(run_cfg, bench_serial);
    }
    if (diff_cmd->parsed()) return cmd_diff(diff_in, diff_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "arrow3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const arrow3::IoError& e) {
    std::cerr << "arrow3: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "arrow3: internal fault: " << e.what() << "\n";
    return kExitFault;
  }
  return kExitUsage;
}
