// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Reduction of a symmetric 3x3 matrix to an ordered arrow matrix by a
// Jacobi rotation in the (1,2)-plane.

#pragma once

#include <utility>

#include "arrow3/core.hpp"

namespace arrow3 {

/// Ordered arrow matrix
///   [ alpha1   0      beta1 ]
///   [   0    alpha2   beta2 ]
///   [ beta1  beta2    gamma ]
/// with alpha1 >= alpha2. Construction enforces ordering and finiteness.
struct ArrowMat3 {
  double alpha1, alpha2, beta1, beta2, gamma;

  ArrowMat3(double alpha1_, double alpha2_, double beta1_, double beta2_, double gamma_);

  SymMat3 to_sym() const { return SymMat3(alpha1, 0.0, beta1, alpha2, beta2, gamma); }
  double trace() const { return alpha1 + alpha2 + gamma; }
};

/// Plane rotation [c s; -s c] with c^2 + s^2 = 1 within 4 eps.
struct JacobiRot {
  double c = 1.0;
  double s = 0.0;

  Mat3 embed12() const {
    Mat3 q = Mat3::identity();
    q(0, 0) = c;
    q(0, 1) = s;
    q(1, 0) = -s;
    q(1, 1) = c;
    return q;
  }
};

struct JacobiResult {
  JacobiRot rot;
  double d1 = 0.0;  // >= d2
  double d2 = 0.0;
};

/// Diagonalizes [a11 a12; a12 a22]: the returned rotation R = [c s; -s c]
/// satisfies R A R^T = diag(d1, d2) with d1 >= d2. a12 == 0 yields the
/// identity or the swap rotation; equal diagonal entries take the 45-degree
/// rotation.
JacobiResult jacobi_rotation(double a11, double a12, double a22);

/// Applies the (1,2)-plane Jacobi rotation Q of the principal 2x2 block so
/// that Q S Q^T is an ordered arrow: beta1 = c*a13 + s*a23,
/// beta2 = -s*a13 + c*a23, gamma = a33 unchanged.
std::pair<ArrowMat3, Rot3> reduce_to_arrow(const SymMat3& s);

}  // namespace arrow3
