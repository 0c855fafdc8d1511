// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/assembly.hpp"

#include <algorithm>
#include <cmath>

namespace arrow3 {

ReducedArrow shift_right(const ArrowMat3& a) {
  return ReducedArrow(a.alpha1 - a.alpha2, a.beta1, a.beta2, a.gamma - a.alpha1);
}

ReducedArrow shift_left(const ArrowMat3& a) {
  return ReducedArrow(a.alpha1 - a.alpha2, a.beta2, a.beta1, a.alpha2 - a.gamma);
}

std::array<Vec3, 3> eigenvectors_from_roots(const ArrowMat3& a, double mu, double nu) {
  if (!(mu > 0.0) || !(nu > 0.0))
    throw std::invalid_argument("eigenvectors_from_roots: roots must be positive");
  const double abar = a.alpha1 - a.alpha2;
  const Vec3 u1 = {a.beta1 * (mu + abar), a.beta2 * mu, mu * (mu + abar)};
  const Vec3 u3 = {a.beta1 * nu, a.beta2 * (nu + abar), -nu * (nu + abar)};
  const Vec3 u2 = {-a.beta2 * mu * (nu + abar), a.beta1 * nu * (mu + abar),
                   a.beta1 * a.beta2 * abar};
  return {u1, u2, u3};
}

namespace {

Vec3 normalized_with_sign(const Vec3& u) {
  const double n = norm(u);
  Vec3 v = (1.0 / n) * u;
  // Deterministic sign: the largest-magnitude component is positive.
  double big = v.x;
  if (std::abs(v.y) > std::abs(big)) big = v.y;
  if (std::abs(v.z) > std::abs(big)) big = v.z;
  if (big < 0.0) v = -1.0 * v;
  return v;
}

ZeroFinderResult find_rightmost(const ReducedArrow& a, Method method, double c_term,
                                int max_iter) {
  if (method == Method::BorgesGragg) {
    return rightmost_bg(a, c_term, max_iter > 0 ? max_iter : kDefaultBgMaxIter);
  }
  return rightmost_newton(a, c_term, max_iter > 0 ? max_iter : kDefaultNewtonMaxIter);
}

}  // namespace

ArrowEigenSolution solve_arrow(const ArrowMat3& a, Method method, double c_term, int max_iter) {
  const ZeroFinderResult right = find_rightmost(shift_right(a), method, c_term, max_iter);
  const ZeroFinderResult left = find_rightmost(shift_left(a), method, c_term, max_iter);

  ArrowEigenSolution sol;
  sol.mu = right.root;
  sol.nu = left.root;
  sol.method = method;
  sol.iter_mu = right.iterations;
  sol.iter_nu = left.iterations;
  sol.lambda = {a.alpha1 + sol.mu, sol.nu - sol.mu + a.gamma, a.alpha2 - sol.nu};

  const std::array<Vec3, 3> raw = eigenvectors_from_roots(a, sol.mu, sol.nu);
  for (int i = 0; i < 3; ++i)
    sol.u[static_cast<std::size_t>(i)] = normalized_with_sign(raw[static_cast<std::size_t>(i)]);

  // Interlacing makes this a no-op in exact arithmetic; rounding near a
  // deflation boundary can still graze a tie.
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return sol.lambda[static_cast<std::size_t>(i)] > sol.lambda[static_cast<std::size_t>(j)];
  });
  if (order != std::array<int, 3>{0, 1, 2}) {
    const auto lam = sol.lambda;
    const auto u = sol.u;
    for (int i = 0; i < 3; ++i) {
      sol.lambda[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      sol.u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    }
  }
  return sol;
}

namespace {

struct PipelineResult {
  EigenDecomp3 decomp;
  SolveInfo info;
};

PipelineResult solve_scaled(const SymMat3& s, const SolveConfig& cfg) {
  const auto [arrow, q] = reduce_to_arrow(s);
  DeflationOutcome outcome = numerical_deflation(arrow, cfg.c_deflate);
  SolveInfo info;
  info.method = cfg.method;

  if (std::holds_alternative<NoDeflationOutcome>(outcome)) {
    const ArrowEigenSolution sol = solve_arrow(arrow, cfg.method, cfg.c_term, cfg.max_iter);
    if (sol.mu > 0.0 && sol.nu > 0.0) {
      info.path = SolvePath::Secular;
      info.mu = sol.mu;
      info.nu = sol.nu;
      info.iter_mu = sol.iter_mu;
      info.iter_nu = sol.iter_nu;
      Rot3 v;
      for (int i = 0; i < 3; ++i) v.set_col(i, sol.u[static_cast<std::size_t>(i)]);
      return {EigenDecomp3(sol.lambda, transpose(q) * v), info};
    }
    // Underflowed root: treat as deflation with a doubled constant until the
    // test accepts. Unreachable for non-deflated arrows at normal scales.
    info.path = SolvePath::ForcedDeflation;
    double c = 2.0 * cfg.c_deflate;
    for (int i = 0; i < 64 && std::holds_alternative<NoDeflationOutcome>(outcome); ++i, c *= 2.0) {
      outcome = numerical_deflation(arrow, c);
    }
    if (std::holds_alternative<NoDeflationOutcome>(outcome))
      throw InternalFaultError("solve: forced deflation never triggered");
  } else {
    info.path = std::holds_alternative<DiagonalOutcome>(outcome) ? SolvePath::Diagonal
                                                                 : SolvePath::Deflated;
  }

  const EigenDecomp3 e = resolve_deflated(outcome);
  return {EigenDecomp3(e.lambda, transpose(q) * e.V), info};
}

}  // namespace

std::pair<EigenDecomp3, SolveInfo> solve_ex(const SymMat3& s, const SolveConfig& cfg) {
  const double m = s.max_abs();
  if (m == 0.0) {
    SolveInfo info;
    info.path = SolvePath::Diagonal;
    info.method = cfg.method;
    return {EigenDecomp3({0.0, 0.0, 0.0}, Mat3::identity()), info};
  }

  const SymMat3 scaled(s.a11 / m, s.a12 / m, s.a13 / m, s.a22 / m, s.a23 / m, s.a33 / m);
  PipelineResult r = solve_scaled(scaled, cfg);
  std::array<double, 3> lambda = r.decomp.lambda;
  for (double& l : lambda) l *= m;
  return {EigenDecomp3(lambda, r.decomp.V), r.info};
}

EigenDecomp3 solve(const SymMat3& s, const SolveConfig& cfg) { return solve_ex(s, cfg).first; }

std::vector<EigenDecomp3> solve_batch(std::span<const SymMat3> mats, const SolveConfig& cfg,
                                      bool parallel) {
  std::vector<EigenDecomp3> out(mats.size(), EigenDecomp3({0.0, 0.0, 0.0}, Mat3::identity()));
  const auto n = static_cast<std::ptrdiff_t>(mats.size());
  std::exception_ptr error;  // exceptions must not unwind through the omp region
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = solve(mats[static_cast<std::size_t>(i)], cfg);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = solve(mats[static_cast<std::size_t>(i)], cfg);
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace arrow3
