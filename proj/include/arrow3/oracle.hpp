// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent slow-and-careful 3x3 symmetric eigensolver used as ground
// truth in tests and as the comparison baseline. Deliberately shares no code
// with the arrow pipeline.

#pragma once

#include <functional>

#include "arrow3/core.hpp"

namespace arrow3 {

struct OracleResult {
  std::array<double, 3> lambda;  // descending
  Rot3 V;                        // columns are eigenvectors
  int sweeps = 0;
};

/// Cyclic Jacobi sweeps until every off-diagonal magnitude is at most
/// eps * ||S||_F, accumulating the rotation product. Eigenvalues are
/// extracted as Rayleigh quotients of the accumulated columns, which squares
/// the eigenvector error. Throws SweepLimitError after 30 sweeps.
OracleResult oracle_eig3(const SymMat3& s);

/// The comparison stand-in for a general-purpose dense solver: the same
/// cyclic Jacobi iteration stopped at the looser sqrt(eps) * ||S||_F
/// threshold plus one finishing sweep.
OracleResult baseline_eig3(const SymMat3& s);

/// Plain bisection on [lo, hi] down to bracket width tol.
/// Requires a strict sign change; throws InvalidBracketError otherwise.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace arrow3
