// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Accuracy-comparison harness: random symmetric test matrices from three
// distributions, dual solver runs, two Frobenius error measures per solver,
// and sorted-difference series for plotting.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrow3/assembly.hpp"
#include "arrow3/core.hpp"
#include "arrow3/rng.hpp"

namespace arrow3 {

/// A CSV file could not be opened, read, or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Dist { Uniform01, Normal01, ChiSq1 };

std::string_view dist_name(Dist d);
std::optional<Dist> dist_from_name(std::string_view name);

/// Stream tag separating the three distributions' counter spaces.
std::uint64_t dist_stream_tag(Dist d);

struct TrialRecord {
  std::uint64_t index = 0;
  Dist dist = Dist::Uniform01;
  double orth_err_main = 0.0;
  double resid_err_main = 0.0;
  double orth_err_base = 0.0;
  double resid_err_base = 0.0;
};

struct RunConfig {
  std::uint64_t n_matrices = 100000;
  Dist dist = Dist::Uniform01;
  std::uint64_t seed = 0;
  Method method = Method::BorgesGragg;
  double c_deflate = kDefaultDeflateC;
  double c_term = kDefaultTermC;
  std::string output_path;  // empty = no CSV written
};

struct MetricSummary {
  double max = 0.0;
  double median = 0.0;
};

struct RunSummary {
  MetricSummary orth_main, resid_main, orth_base, resid_base;
};

struct RunResult {
  std::vector<TrialRecord> records;  // ordered by index
  RunSummary summary;
};

/// Six i.i.d. draws filling a11, a12, a13, a22, a23, a33 in that order.
SymMat3 gen_sym3(Dist dist, TrialStream& stream);

/// (||I - V^T V||_F, ||T V - V Lambda||_F).
std::pair<double, double> metrics(const SymMat3& t, const EigenDecomp3& e);

/// Runs n_matrices independent trials: matrix i is a pure function of
/// (seed, dist, i), both solvers run on it, and all four metrics are
/// recorded. Writes the CSV when output_path is set. The parallel kernel
/// produces records identical to the serial reference.
RunResult run_comparison(const RunConfig& cfg, bool parallel = true);

/// Per-metric per-trial (baseline error - main error), each series sorted
/// ascending: positive entries mean the main solver measured more accurate.
struct SortedDifferences {
  std::vector<double> orth;
  std::vector<double> resid;
};
SortedDifferences sorted_differences(std::span<const TrialRecord> records);

/// Shortest round-trip decimal form, byte-stable across runs.
std::string format_double(double v);

/// CSV with header index,dist,orth_main,resid_main,orth_base,resid_base.
void write_records_csv(const std::string& path, std::span<const TrialRecord> records);
std::vector<TrialRecord> read_records_csv(const std::string& path);

/// Two-column CSV rank,delta (rank starts at 1).
void write_diff_csv(const std::string& path, std::span<const double> deltas);

}  // namespace arrow3
