// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact and numerical deflation of an ordered arrow matrix. Tiny couplings
// are dropped under an EISPACK-style threshold, justified by the
// Wielandt-Hoffman theorem.

#pragma once

#include <variant>

#include "arrow3/core.hpp"
#include "arrow3/reduction.hpp"

namespace arrow3 {

/// Both couplings vanish: the arrow is diagonal. lambda is sorted
/// descending; axis[i] is the standard basis vector paired with lambda[i].
struct DiagonalOutcome {
  std::array<double, 3> lambda;
  std::array<int, 3> axis;
};

/// One eigenvalue split off; the rest of the spectrum lives in the
/// residual 2x2 block [[d, h], [h, g]] reached through `rotation`.
struct DeflatedOutcome {
  double accepted;  // eigenvalue (alpha1*beta2^2 + alpha2*beta1^2) / h^2
  double d;
  double h;  // > 0
  double g;
  Rot3 rotation;  // G with G * A * G^T block-diagonal up to the dropped entry
};

/// The arrow is ordered and reduced: alpha1 > alpha2 strictly and both
/// couplings nonzero. Safe to hand to the zero finders.
struct NoDeflationOutcome {
  ArrowMat3 arrow;
};

using DeflationOutcome = std::variant<DiagonalOutcome, DeflatedOutcome, NoDeflationOutcome>;

/// Eigenpair of a symmetric 2x2, lam_hi >= lam_lo, rotation [c s; -s c]
/// diagonalizing with lam_hi first.
struct Eig2 {
  double lam_hi, lam_lo;
  double c, s;
};

/// Default deflation constant. Small multiple of unity in the EISPACK
/// tradition; exposed for experimentation.
inline constexpr double kDefaultDeflateC = 8.0;

/// Total classification of an ordered arrow:
///  - h = hypot(beta1, beta2) == 0          -> DiagonalOutcome
///  - |alpha*beta1*beta2| <= C eps |alpha1+alpha2| h^2  -> DeflatedOutcome
///  - otherwise                              -> NoDeflationOutcome
/// Exact beta- and combo-deflations zero the left side, so both are subsumed
/// by the numerical test.
DeflationOutcome numerical_deflation(const ArrowMat3& a, double c_deflate = kDefaultDeflateC);

/// Eigenpair of [[d1, off], [off, d2]] computed cancellation-safely: the
/// larger-magnitude root from the stable quadratic form, the other via the
/// determinant quotient.
Eig2 eig2_sym(double d1, double off, double d2);

/// Expands a Diagonal or Deflated outcome into a full factorization of the
/// originating arrow. Rejects NoDeflation input.
EigenDecomp3 resolve_deflated(const DeflationOutcome& outcome);

}  // namespace arrow3
