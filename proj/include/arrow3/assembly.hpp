// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Full eigensolve of an ordered reduced arrow via two shifted zero finds,
// and the end-to-end pipeline for arbitrary symmetric 3x3 input.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "arrow3/core.hpp"
#include "arrow3/deflation.hpp"
#include "arrow3/reduction.hpp"
#include "arrow3/secular.hpp"

namespace arrow3 {

enum class Method { BorgesGragg, Newton };

struct SolveConfig {
  Method method = Method::BorgesGragg;
  double c_deflate = kDefaultDeflateC;
  double c_term = kDefaultTermC;
  int max_iter = 0;  // 0 picks the per-method default (20 BG, 100 Newton)
};

/// Eigensolution of an arrow in terms of the two positive shifted roots:
/// lambda1 = alpha1 + mu, lambda3 = alpha2 - nu, lambda2 = nu - mu + gamma
/// by the trace identity.
struct ArrowEigenSolution {
  double mu, nu;  // both > 0
  std::array<double, 3> lambda;
  std::array<Vec3, 3> u;  // unit eigenvectors, paired with lambda
  Method method;
  int iter_mu = 0, iter_nu = 0;
};

/// A - alpha1*I as a ReducedArrow; its positive root is mu = lambda1 - alpha1.
ReducedArrow shift_right(const ArrowMat3& a);

/// P(alpha2*I - A)P as a ReducedArrow (couplings swap, tip alpha2 - gamma);
/// its positive root is nu = alpha2 - lambda3.
ReducedArrow shift_left(const ArrowMat3& a);

/// Unnormalized eigenvectors from the closed forms
///   u1 = (b1(mu+abar),  b2*mu,          mu(mu+abar))
///   u3 = (b1*nu,        b2(nu+abar),   -nu(nu+abar))
///   u2 = (-b2*mu(nu+abar), b1*nu(mu+abar), b1*b2*abar)
/// u2 is parallel to u1 x u3 with positive scale; no subtractive
/// cancellation occurs beyond forming abar itself.
std::array<Vec3, 3> eigenvectors_from_roots(const ArrowMat3& a, double mu, double nu);

ArrowEigenSolution solve_arrow(const ArrowMat3& a, Method method,
                               double c_term = kDefaultTermC, int max_iter = 0);

enum class SolvePath { Diagonal, Deflated, Secular, ForcedDeflation };

struct SolveInfo {
  SolvePath path = SolvePath::Secular;
  Method method = Method::BorgesGragg;
  double mu = 0.0, nu = 0.0;
  int iter_mu = 0, iter_nu = 0;
};

/// Full pipeline: scale by the max entry, reduce to an ordered arrow, try
/// deflation, otherwise run the two zero finds; eigenvectors are
/// back-transformed by the reduction rotation and eigenvalues rescaled.
EigenDecomp3 solve(const SymMat3& s, const SolveConfig& cfg = {});

/// solve plus per-call diagnostics.
std::pair<EigenDecomp3, SolveInfo> solve_ex(const SymMat3& s, const SolveConfig& cfg = {});

/// Maps solve over a batch with no shared mutable state. The parallel kernel
/// partitions trials across OpenMP threads; results are identical to the
/// serial reference for any thread count.
std::vector<EigenDecomp3> solve_batch(std::span<const SymMat3> mats, const SolveConfig& cfg = {},
                                      bool parallel = true);

}  // namespace arrow3
