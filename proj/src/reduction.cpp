// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/reduction.hpp"

#include <cmath>

namespace arrow3 {

ArrowMat3::ArrowMat3(double alpha1_, double alpha2_, double beta1_, double beta2_, double gamma_)
    : alpha1(alpha1_), alpha2(alpha2_), beta1(beta1_), beta2(beta2_), gamma(gamma_) {
  for (double v : {alpha1, alpha2, beta1, beta2, gamma}) {
    if (!std::isfinite(v)) throw std::invalid_argument("ArrowMat3: non-finite entry");
  }
  if (!(alpha1 >= alpha2)) throw std::invalid_argument("ArrowMat3: shaft not ordered");
}

JacobiResult jacobi_rotation(double a11, double a12, double a22) {
  for (double v : {a11, a12, a22}) {
    if (!std::isfinite(v)) throw std::invalid_argument("jacobi_rotation: non-finite entry");
  }

  JacobiResult out;
  if (a12 == 0.0) {
    out.rot = {1.0, 0.0};
    out.d1 = a11;
    out.d2 = a22;
  } else {
    const double tau = (a22 - a11) / (2.0 * a12);
    const double t_std = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    // The stable tangent above is stated for the transposed-similarity
    // convention; R A R^T with R = [c s; -s c] annihilates with -t_std.
    const double t = -t_std;
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    out.rot = {c, t * c};
    out.d1 = a11 + t * a12;
    out.d2 = a22 - t * a12;
  }

  if (out.d1 < out.d2) {
    // Compose with the 90-degree rotation to enforce the ordering.
    out.rot = {-out.rot.s, out.rot.c};
    std::swap(out.d1, out.d2);
  }
  return out;
}

std::pair<ArrowMat3, Rot3> reduce_to_arrow(const SymMat3& s) {
  const JacobiResult jr = jacobi_rotation(s.a11, s.a12, s.a22);
  const double c = jr.rot.c;
  const double ss = jr.rot.s;
  const double beta1 = c * s.a13 + ss * s.a23;
  const double beta2 = -ss * s.a13 + c * s.a23;
  return {ArrowMat3(jr.d1, jr.d2, beta1, beta2, s.a33), jr.rot.embed12()};
}

}  // namespace arrow3
