// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Each criterion prints exactly one PASS/FAIL line with the
// measured quantities next to their thresholds; the process exits 0 only if
// every criterion passes. Scale mirrors the accuracy study: 100,000 matrices
// per distribution.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "arrow3/assembly.hpp"
#include "arrow3/harness.hpp"
#include "arrow3/oracle.hpp"
#include "arrow3/rng.hpp"

using namespace arrow3;

namespace {

constexpr std::int64_t kTrialsPerDist = 100000;
constexpr std::int64_t kZeroFinderTrials = 100000;
constexpr std::int64_t kInterlacingTrials = 10000;
constexpr std::int64_t kDeflationTrials = 10000;
constexpr std::uint64_t kSeed = 2026;

// Stream tags 1..3 belong to the harness distributions; the acceptance
// generators use their own tags.
constexpr std::uint64_t kArrowTag = 10;
constexpr std::uint64_t kInterlaceTag = 11;
constexpr std::uint64_t kDeflateTag = 12;

template <typename Fn>
void parallel_for(std::int64_t n, const Fn& fn) {
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2), v.end());
  const double hi = v[n / 2];
  if (n % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2 - 1), v.end());
  return 0.5 * (v[n / 2 - 1] + hi);
}

double median_int(const std::vector<int>& v) {
  std::vector<double> d(v.begin(), v.end());
  return median(std::move(d));
}

ReducedArrow random_reduced(TrialStream& s) {
  const double abar = std::exp(s.normal01());
  double b1 = s.normal01();
  double b2 = s.normal01();
  while (b1 == 0.0) b1 = s.normal01();
  while (b2 == 0.0) b2 = s.normal01();
  return ReducedArrow(abar, b1, b2, 2.0 * s.normal01());
}

struct DistResults {
  // One slot per trial; [0] = Borges-Gragg, [1] = Newton.
  std::vector<double> orth[2], resid[2];
  std::vector<char> oracle_ok, ortho13_ok;
  std::int64_t secular_trials = 0;
  double seconds = 0.0;
};

DistResults run_distribution(Dist dist) {
  DistResults r;
  for (int m = 0; m < 2; ++m) {
    r.orth[m].resize(kTrialsPerDist);
    r.resid[m].resize(kTrialsPerDist);
  }
  r.oracle_ok.assign(kTrialsPerDist, 1);
  r.ortho13_ok.assign(kTrialsPerDist, 1);
  std::vector<char> secular(kTrialsPerDist, 0);

  const auto t0 = std::chrono::steady_clock::now();
  parallel_for(kTrialsPerDist, [&](std::int64_t i) {
    TrialStream stream(kSeed, dist_stream_tag(dist), static_cast<std::uint64_t>(i));
    const SymMat3 t = gen_sym3(dist, stream);
    const double nrm = frob_norm(t);
    const double resid_scale = std::max(1.0, nrm);
    const OracleResult oracle = oracle_eig3(t);

    for (int m = 0; m < 2; ++m) {
      SolveConfig cfg;
      cfg.method = (m == 0) ? Method::BorgesGragg : Method::Newton;
      const auto [e, info] = solve_ex(t, cfg);
      const auto [orth, resid] = metrics(t, e);
      r.orth[m][static_cast<std::size_t>(i)] = orth;
      r.resid[m][static_cast<std::size_t>(i)] = resid / resid_scale;

      for (int k = 0; k < 3; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        if (std::abs(e.lambda[ks] - oracle.lambda[ks]) > 64.0 * kEps * nrm)
          r.oracle_ok[static_cast<std::size_t>(i)] = 0;
      }
      if (info.path == SolvePath::Secular) {
        secular[static_cast<std::size_t>(i)] = 1;
        // Columns are unit vectors, so the dot product is the cosine.
        if (std::abs(dot(e.V.col(0), e.V.col(2))) > 1e-14)
          r.ortho13_ok[static_cast<std::size_t>(i)] = 0;
      }
    }
  });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.secular_trials = std::count(secular.begin(), secular.end(), 1);
  return r;
}

bool criterion_orthogonality(const DistResults* res) {
  double worst_max = 0.0, worst_median = 0.0, slowest = 0.0;
  for (int d = 0; d < 3; ++d) {
    for (int m = 0; m < 2; ++m) {
      worst_max = std::max(worst_max, *std::max_element(res[d].orth[m].begin(), res[d].orth[m].end()));
      worst_median = std::max(worst_median, median(res[d].orth[m]));
    }
    slowest = std::max(slowest, res[d].seconds);
  }
  const bool ok = worst_max <= 1e-13 && worst_median <= 5e-16 && slowest < 60.0;
  std::printf("%s 1 orthogonality: max %.3g (<=1e-13), median %.3g (<=5e-16), slowest dist %.1fs (<60s)\n",
              ok ? "PASS" : "FAIL", worst_max, worst_median, slowest);
  return ok;
}

bool criterion_residual(const DistResults* res) {
  double worst_max = 0.0, worst_median = 0.0;
  for (int d = 0; d < 3; ++d) {
    for (int m = 0; m < 2; ++m) {
      worst_max = std::max(worst_max, *std::max_element(res[d].resid[m].begin(), res[d].resid[m].end()));
      worst_median = std::max(worst_median, median(res[d].resid[m]));
    }
  }
  const bool ok = worst_max <= 1e-13 && worst_median <= 5e-16;
  std::printf("%s 2 residual: max %.3g (<=1e-13), median %.3g (<=5e-16), relative to max(1,||T||_F)\n",
              ok ? "PASS" : "FAIL", worst_max, worst_median);
  return ok;
}

bool criterion_oracle(const DistResults* res) {
  std::int64_t bad = 0;
  for (int d = 0; d < 3; ++d)
    bad += std::count(res[d].oracle_ok.begin(), res[d].oracle_ok.end(), 0);
  const bool ok = bad == 0;
  std::printf("%s 3 oracle agreement: %lld violations of 64 eps ||S||_F over %lld trials\n",
              ok ? "PASS" : "FAIL", static_cast<long long>(bad),
              static_cast<long long>(3 * kTrialsPerDist));
  return ok;
}

bool criterion_ortho13(const DistResults* res) {
  std::int64_t bad = 0, secular = 0;
  for (int d = 0; d < 3; ++d) {
    bad += std::count(res[d].ortho13_ok.begin(), res[d].ortho13_ok.end(), 0);
    secular += res[d].secular_trials;
  }
  const bool ok = bad == 0;
  std::printf("%s 4 u1/u3 orthogonality: %lld violations of 1e-14 over %lld non-deflated trials\n",
              ok ? "PASS" : "FAIL", static_cast<long long>(bad), static_cast<long long>(secular));
  return ok;
}

bool criterion_zero_finders() {
  std::vector<int> bg_iters(kZeroFinderTrials), nw_iters(kZeroFinderTrials);
  std::vector<char> ok_flags(kZeroFinderTrials, 1);
  parallel_for(kZeroFinderTrials, [&](std::int64_t i) {
    TrialStream stream(kSeed, kArrowTag, static_cast<std::uint64_t>(i));
    const ReducedArrow a = random_reduced(stream);
    const ZeroFinderResult bg = rightmost_bg(a);
    const ZeroFinderResult nw = rightmost_newton(a);
    bool good = true;
    for (std::size_t k = 1; k < bg.history.size(); ++k)
      good = good && bg.history[k] <= bg.history[k - 1];
    for (std::size_t k = 1; k < nw.history.size(); ++k)
      good = good && nw.history[k] >= nw.history[k - 1];
    good = good && std::abs(bg.root - nw.root) <= 8.0 * kEps * bg.root;
    good = good && bg.iterations <= 20 && nw.iterations <= 100;
    ok_flags[static_cast<std::size_t>(i)] = good ? 1 : 0;
    bg_iters[static_cast<std::size_t>(i)] = bg.iterations;
    nw_iters[static_cast<std::size_t>(i)] = nw.iterations;
  });
  const std::int64_t bad = std::count(ok_flags.begin(), ok_flags.end(), 0);
  const bool ok = bad == 0;
  std::printf(
      "%s 5 zero finders: %lld violations over %lld arrows; median iters %.1f (bg) %.1f (newton), "
      "max %d/%d (<=20/<=100)\n",
      ok ? "PASS" : "FAIL", static_cast<long long>(bad),
      static_cast<long long>(kZeroFinderTrials), median_int(bg_iters), median_int(nw_iters),
      *std::max_element(bg_iters.begin(), bg_iters.end()),
      *std::max_element(nw_iters.begin(), nw_iters.end()));
  return ok;
}

bool criterion_interlacing() {
  std::vector<char> ok_flags(kInterlacingTrials, 1);
  parallel_for(kInterlacingTrials, [&](std::int64_t i) {
    TrialStream stream(kSeed, kInterlaceTag, static_cast<std::uint64_t>(i));
    const ReducedArrow a = random_reduced(stream);
    const OracleResult o = oracle_eig3(a.to_sym());
    const bool good = o.lambda[0] > 0.0 && 0.0 > o.lambda[1] && o.lambda[1] > -a.abar &&
                      -a.abar > o.lambda[2];
    ok_flags[static_cast<std::size_t>(i)] = good ? 1 : 0;
  });
  const std::int64_t bad = std::count(ok_flags.begin(), ok_flags.end(), 0);
  const bool ok = bad == 0;
  std::printf(
      "%s 6 interlacing: %lld violations of l1 > 0 > l2 > -abar > l3 over %lld arrows (oracle roots)\n",
      ok ? "PASS" : "FAIL", static_cast<long long>(bad),
      static_cast<long long>(kInterlacingTrials));
  return ok;
}

bool criterion_deflation() {
  std::vector<double> orth(kDeflationTrials), resid(kDeflationTrials);
  parallel_for(kDeflationTrials, [&](std::int64_t i) {
    TrialStream stream(kSeed, kDeflateTag, static_cast<std::uint64_t>(i));
    const double x = stream.normal01();
    const double y = stream.normal01();
    double b2 = stream.normal01();
    while (b2 == 0.0) b2 = stream.normal01();
    const double g = stream.normal01();
    const double scale =
        std::max({std::abs(x), std::abs(y), std::abs(b2), std::abs(g), 1.0});
    const double factors[3] = {0.0, kEps, std::sqrt(kEps)};
    const double b1 = factors[i % 3] * scale;
    const ArrowMat3 a(std::max(x, y), std::min(x, y), b1, b2, g);

    const SymMat3 t = a.to_sym();
    const auto [orth_err, resid_err] = metrics(t, solve(t));
    orth[static_cast<std::size_t>(i)] = orth_err;
    resid[static_cast<std::size_t>(i)] = resid_err / std::max(1.0, frob_norm(t));
  });
  const double orth_max = *std::max_element(orth.begin(), orth.end());
  const double resid_max = *std::max_element(resid.begin(), resid.end());
  const double orth_med = median(orth);
  const double resid_med = median(resid);
  const bool ok = orth_max <= 1e-13 && resid_max <= 1e-13 && orth_med <= 5e-16 && resid_med <= 5e-16;
  std::printf(
      "%s 7 near-deflating arrows (|b1| in {0, eps, sqrt(eps)}*scale): orth max %.3g med %.3g, "
      "resid max %.3g med %.3g (<=1e-13 / <=5e-16)\n",
      ok ? "PASS" : "FAIL", orth_max, orth_med, resid_max, resid_med);
  return ok;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool criterion_determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto pa = dir / "arrow3_acc_a.csv";
  const auto pb = dir / "arrow3_acc_b.csv";
  const auto pc = dir / "arrow3_acc_c.csv";

  RunConfig cfg;
  cfg.n_matrices = 20000;
  cfg.dist = Dist::Uniform01;
  cfg.seed = 7;
  cfg.output_path = pa.string();
  run_comparison(cfg, true);
  cfg.output_path = pb.string();
  run_comparison(cfg, true);
  cfg.output_path = pc.string();
  run_comparison(cfg, false);  // serial reference

  const std::string a = slurp(pa), b = slurp(pb), c = slurp(pc);
  const bool ok = !a.empty() && a == b && a == c;
  std::printf("%s 8 determinism: repeated and serial/parallel bench runs byte-identical (%zu bytes)\n",
              ok ? "PASS" : "FAIL", a.size());
  std::filesystem::remove(pa);
  std::filesystem::remove(pb);
  std::filesystem::remove(pc);
  return ok;
}

bool criterion_protocol() {
  bool ok = true;
  double frac_orth[3], frac_resid[3];
  for (int d = 0; d < 3; ++d) {
    RunConfig cfg;
    cfg.n_matrices = kTrialsPerDist;
    cfg.dist = static_cast<Dist>(d);
    cfg.seed = kSeed;
    const RunResult run = run_comparison(cfg, true);
    const SortedDifferences diffs = sorted_differences(run.records);

    ok = ok && diffs.orth.size() == static_cast<std::size_t>(kTrialsPerDist);
    ok = ok && diffs.resid.size() == static_cast<std::size_t>(kTrialsPerDist);
    ok = ok && std::is_sorted(diffs.orth.begin(), diffs.orth.end());
    ok = ok && std::is_sorted(diffs.resid.begin(), diffs.resid.end());

    const auto positive = [](const std::vector<double>& v) {
      return static_cast<double>(std::count_if(v.begin(), v.end(), [](double x) { return x > 0.0; })) /
             static_cast<double>(v.size());
    };
    frac_orth[d] = positive(diffs.orth);
    frac_resid[d] = positive(diffs.resid);
  }
  // The accuracy advantage over the baseline is reported, not gated.
  std::printf(
      "%s 9 comparison protocol: sorted series well-formed; main more accurate than baseline in "
      "orth %.1f%%/%.1f%%/%.1f%%, resid %.1f%%/%.1f%%/%.1f%% (uniform/normal/chisq; informational)\n",
      ok ? "PASS" : "FAIL", 100.0 * frac_orth[0], 100.0 * frac_orth[1], 100.0 * frac_orth[2],
      100.0 * frac_resid[0], 100.0 * frac_resid[1], 100.0 * frac_resid[2]);
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance: %lld matrices per distribution, seed %llu\n",
              static_cast<long long>(kTrialsPerDist), static_cast<unsigned long long>(kSeed));

  DistResults res[3];
  const Dist dists[3] = {Dist::Uniform01, Dist::Normal01, Dist::ChiSq1};
  for (int d = 0; d < 3; ++d) res[d] = run_distribution(dists[d]);

  int passed = 0, total = 0;
  const auto tally = [&](bool ok) {
    ++total;
    if (ok) ++passed;
  };

  tally(criterion_orthogonality(res));
  tally(criterion_residual(res));
  tally(criterion_oracle(res));
  tally(criterion_ortho13(res));
  tally(criterion_zero_finders());
  tally(criterion_interlacing());
  tally(criterion_deflation());
  tally(criterion_determinism());
  tally(criterion_protocol());

  std::printf("acceptance: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
