// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/deflation.hpp"

#include <algorithm>
#include <cmath>

namespace arrow3 {

DeflationOutcome numerical_deflation(const ArrowMat3& a, double c_deflate) {
  if (!(c_deflate > 0.0)) throw std::invalid_argument("numerical_deflation: C must be positive");

  const double h = hypot2(a.beta1, a.beta2);
  if (h == 0.0) {
    std::array<double, 3> lambda = {a.alpha1, a.alpha2, a.gamma};
    std::array<int, 3> axis = {0, 1, 2};
    std::stable_sort(axis.begin(), axis.end(), [&](int i, int j) {
      return lambda[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(j)];
    });
    std::sort(lambda.begin(), lambda.end(), std::greater<double>());
    return DiagonalOutcome{lambda, axis};
  }

  // The EISPACK-style test |alpha*b1*b2| <= C eps |alpha1+alpha2| h^2,
  // evaluated with both sides divided by h^2 so huge couplings cannot
  // overflow the comparison.
  const double alpha = a.alpha1 - a.alpha2;
  const double b1 = a.beta1 / h;
  const double b2 = a.beta2 / h;
  if (std::abs(alpha * b1 * b2) <= c_deflate * kEps * std::abs(a.alpha1 + a.alpha2)) {
    DeflatedOutcome out;
    out.accepted = a.alpha1 * (b2 * b2) + a.alpha2 * (b1 * b1);
    out.d = a.alpha1 * (b1 * b1) + a.alpha2 * (b2 * b2);
    out.h = h;
    out.g = a.gamma;
    out.rotation = Mat3::identity();
    out.rotation(0, 0) = b2;
    out.rotation(0, 1) = -b1;
    out.rotation(1, 0) = b1;
    out.rotation(1, 1) = b2;
    return out;
  }
  return NoDeflationOutcome{a};
}

Eig2 eig2_sym(double d1, double off, double d2) {
  for (double v : {d1, off, d2}) {
    if (!std::isfinite(v)) throw std::invalid_argument("eig2_sym: non-finite entry");
  }

  if (off == 0.0) {
    if (d1 >= d2) return {d1, d2, 1.0, 0.0};
    return {d2, d1, 0.0, 1.0};
  }

  const double tr = d1 + d2;
  const double disc = hypot2(d1 - d2, 2.0 * off);
  const double lam_big = 0.5 * (tr >= 0.0 ? tr + disc : tr - disc);
  // The other root via the determinant quotient, factored through lam_big to
  // dodge overflow in d1*d2.
  const double acmx = std::abs(d1) >= std::abs(d2) ? d1 : d2;
  const double acmn = std::abs(d1) >= std::abs(d2) ? d2 : d1;
  const double lam_small = (acmx / lam_big) * acmn - (off / lam_big) * off;

  const double lam_hi = std::max(lam_big, lam_small);
  const double lam_lo = std::min(lam_big, lam_small);

  // Eigenvector of lam_hi from whichever residual row is better conditioned.
  double vx, vy;
  if (std::abs(lam_hi - d2) >= std::abs(lam_hi - d1)) {
    vx = lam_hi - d2;
    vy = off;
  } else {
    vx = off;
    vy = lam_hi - d1;
  }
  const double n = hypot2(vx, vy);
  double c = vx / n;
  double s = vy / n;
  if (c < 0.0 || (c == 0.0 && s < 0.0)) {
    c = -c;
    s = -s;
  }
  return {lam_hi, lam_lo, c, s};
}

namespace {

EigenDecomp3 sorted_decomp(std::array<double, 3> lambda, std::array<Vec3, 3> vecs) {
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return lambda[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(j)];
  });
  std::array<double, 3> lam_sorted;
  Rot3 v;
  for (int i = 0; i < 3; ++i) {
    lam_sorted[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    v.set_col(i, vecs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
  }
  return EigenDecomp3(lam_sorted, v);
}

}  // namespace

EigenDecomp3 resolve_deflated(const DeflationOutcome& outcome) {
  if (const auto* diag = std::get_if<DiagonalOutcome>(&outcome)) {
    Rot3 v{};
    for (int i = 0; i < 3; ++i) v(diag->axis[static_cast<std::size_t>(i)], i) = 1.0;
    return EigenDecomp3(diag->lambda, v);
  }
  if (const auto* defl = std::get_if<DeflatedOutcome>(&outcome)) {
    const Mat3 gt = transpose(defl->rotation);
    const Eig2 e2 = eig2_sym(defl->d, defl->h, defl->g);
    const std::array<double, 3> lambda = {defl->accepted, e2.lam_hi, e2.lam_lo};
    const std::array<Vec3, 3> vecs = {gt * Vec3{1.0, 0.0, 0.0},
                                      gt * Vec3{0.0, e2.c, e2.s},
                                      gt * Vec3{0.0, -e2.s, e2.c}};
    return sorted_decomp(lambda, vecs);
  }
  throw std::invalid_argument("resolve_deflated: outcome is not deflated");
}

}  // namespace arrow3
