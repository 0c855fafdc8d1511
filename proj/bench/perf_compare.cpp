// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Throughput comparison of the serial reference batch kernel against the
// OpenMP one. Both produce identical output; see the batch determinism test.

#include <vector>

#include <benchmark/benchmark.h>

#include "arrow3/assembly.hpp"
#include "arrow3/harness.hpp"
#include "arrow3/rng.hpp"

namespace {

std::vector<arrow3::SymMat3> make_inputs(std::size_t n) {
  std::vector<arrow3::SymMat3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    arrow3::TrialStream stream(12345, arrow3::dist_stream_tag(arrow3::Dist::Normal01), i);
    out.push_back(arrow3::gen_sym3(arrow3::Dist::Normal01, stream));
  }
  return out;
}

void BM_SolveBatchSerial(benchmark::State& state) {
  const auto inputs = make_inputs(static_cast<std::size_t>(state.range(0)));
  const arrow3::SolveConfig cfg;
  for (auto _ : state) {
    auto result = arrow3::solve_batch(inputs, cfg, /*parallel=*/false);
    benchmark::DoNotOptimize(result.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SolveBatchParallel(benchmark::State& state) {
  const auto inputs = make_inputs(static_cast<std::size_t>(state.range(0)));
  const arrow3::SolveConfig cfg;
  for (auto _ : state) {
    auto result = arrow3::solve_batch(inputs, cfg, /*parallel=*/true);
    benchmark::DoNotOptimize(result.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunComparisonSerial(benchmark::State& state) {
  arrow3::RunConfig cfg;
  cfg.n_matrices = state.range(0);
  cfg.dist = arrow3::Dist::Normal01;
  for (auto _ : state) {
    auto result = arrow3::run_comparison(cfg, /*parallel=*/false);
    benchmark::DoNotOptimize(result.summary.orth_main.max);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunComparisonParallel(benchmark::State& state) {
  arrow3::RunConfig cfg;
  cfg.n_matrices = state.range(0);
  cfg.dist = arrow3::Dist::Normal01;
  for (auto _ : state) {
    auto result = arrow3::run_comparison(cfg, /*parallel=*/true);
    benchmark::DoNotOptimize(result.summary.orth_main.max);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SolveBatchSerial)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBatchParallel)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunComparisonSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunComparisonParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
