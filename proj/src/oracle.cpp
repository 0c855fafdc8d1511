// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace arrow3 {

namespace {

constexpr int kMaxSweeps = 30;

double max_offdiag(const Mat3& a) {
  return std::max({std::abs(a(0, 1)), std::abs(a(0, 2)), std::abs(a(1, 2))});
}

// Annihilate a(p,q) with a two-sided rotation and accumulate it into v so
// that the columns of v converge to the eigenvectors.
void jacobi_pair(Mat3& a, Mat3& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const double app = a(p, p);
  const double aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  const int r = 3 - p - q;  // remaining index
  const double arp = a(r, p);
  const double arq = a(r, q);
  a(r, p) = c * arp - s * arq;
  a(p, r) = a(r, p);
  a(r, q) = s * arp + c * arq;
  a(q, r) = a(r, q);

  for (int i = 0; i < 3; ++i) {
    const double vip = v(i, p);
    const double viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

OracleResult jacobi_eig3(const SymMat3& s, double rel_threshold, bool finishing_sweep) {
  Mat3 a = s.to_mat3();
  Mat3 v = Mat3::identity();
  const double scale = frob_norm(a);
  const double threshold = rel_threshold * scale;

  int sweeps = 0;
  if (scale != 0.0) {
    while (max_offdiag(a) > threshold) {
      if (sweeps >= kMaxSweeps) throw SweepLimitError("oracle_eig3: no convergence in 30 sweeps");
      jacobi_pair(a, v, 0, 1);
      jacobi_pair(a, v, 0, 2);
      jacobi_pair(a, v, 1, 2);
      ++sweeps;
    }
    if (finishing_sweep) {
      jacobi_pair(a, v, 0, 1);
      jacobi_pair(a, v, 0, 2);
      jacobi_pair(a, v, 1, 2);
      ++sweeps;
    }
  }

  std::array<double, 3> lambda;
  std::array<int, 3> order = {0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    const Vec3 col = v.col(i);
    lambda[static_cast<std::size_t>(i)] = dot(col, s * col);  // Rayleigh quotient
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return lambda[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(j)]; });

  OracleResult out;
  for (int i = 0; i < 3; ++i) {
    out.lambda[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    out.V.set_col(i, v.col(order[static_cast<std::size_t>(i)]));
  }
  out.sweeps = sweeps;
  return out;
}

}  // namespace

OracleResult oracle_eig3(const SymMat3& s) { return jacobi_eig3(s, kEps, false); }

OracleResult baseline_eig3(const SymMat3& s) {
  return jacobi_eig3(s, std::sqrt(kEps), true);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw InvalidBracketError("bisect_root: lo must be below hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo * fhi < 0.0)) throw InvalidBracketError("bisect_root: no sign change on [lo, hi]");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket narrower than the grid
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace arrow3
