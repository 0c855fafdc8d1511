// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/core.hpp"

#include <algorithm>

namespace arrow3 {

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    }
  }
  return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

Mat3 transpose(const Mat3& a) {
  Mat3 out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out(r, c) = a(c, r);
  }
  return out;
}

double frob_norm(const Mat3& a) {
  double big = 0.0;
  for (double v : a.m) big = std::max(big, std::abs(v));
  if (big == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : a.m) {
    const double t = v / big;
    sum += t * t;
  }
  return big * std::sqrt(sum);
}

SymMat3::SymMat3(double a11_, double a12_, double a13_, double a22_, double a23_, double a33_)
    : a11(a11_), a12(a12_), a13(a13_), a22(a22_), a23(a23_), a33(a33_) {
  for (double v : {a11, a12, a13, a22, a23, a33}) {
    if (!std::isfinite(v)) throw std::invalid_argument("SymMat3: non-finite entry");
  }
}

Mat3 SymMat3::to_mat3() const {
  Mat3 out;
  out.m = {a11, a12, a13, a12, a22, a23, a13, a23, a33};
  return out;
}

double SymMat3::max_abs() const {
  double big = 0.0;
  for (double v : {a11, a12, a13, a22, a23, a33}) big = std::max(big, std::abs(v));
  return big;
}

Vec3 operator*(const SymMat3& s, const Vec3& v) {
  return {s.a11 * v.x + s.a12 * v.y + s.a13 * v.z,
          s.a12 * v.x + s.a22 * v.y + s.a23 * v.z,
          s.a13 * v.x + s.a23 * v.y + s.a33 * v.z};
}

EigenDecomp3::EigenDecomp3(const std::array<double, 3>& lambda_, const Rot3& v)
    : lambda(lambda_), V(v) {
  for (double l : lambda) {
    if (!std::isfinite(l)) throw std::invalid_argument("EigenDecomp3: non-finite eigenvalue");
  }
  if (!(lambda[0] >= lambda[1] && lambda[1] >= lambda[2])) {
    throw std::invalid_argument("EigenDecomp3: eigenvalues not in descending order");
  }
  if (!is_finite(V)) throw std::invalid_argument("EigenDecomp3: non-finite eigenvector matrix");
}

}  // namespace arrow3
