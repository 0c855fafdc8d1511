// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared numeric types and small matrix/vector primitives.

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arrow3 {

/// Unit roundoff of the binary64 working precision (~2.22e-16).
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// A zero finder failed to terminate within its iteration budget.
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cyclic Jacobi reference solver failed to converge in 30 sweeps.
class SweepLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// bisect_root was handed endpoints without a sign change.
class InvalidBracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-finite intermediate appeared where the preconditions rule it out.
class InternalFaultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Standard cross product; the result is orthogonal to both inputs to rounding.
inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// sqrt(a^2 + b^2) without intermediate overflow or underflow.
inline double hypot2(double a, double b) { return std::hypot(a, b); }

/// Dense 3x3 real matrix, row major.
struct Mat3 {
  std::array<double, 9> m{};

  double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

  static Mat3 identity() {
    Mat3 out;
    out.m = {1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};
    return out;
  }

  Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
  Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }

  void set_col(int c, const Vec3& v) {
    (*this)(0, c) = v.x;
    (*this)(1, c) = v.y;
    (*this)(2, c) = v.z;
  }
};

/// 3x3 matrix whose rotation-valued producers guarantee ||R^T R - I||_F <= 8 eps.
/// The type itself is an unconstrained matrix so that tests can build
/// deliberately non-orthogonal instances.
using Rot3 = Mat3;

inline bool is_finite(const Mat3& a) {
  for (double v : a.m) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);

/// Frobenius norm with max-element scaling so heavy-tailed inputs cannot
/// overflow the intermediate sum of squares.
double frob_norm(const Mat3& a);

/// The six independent entries of a symmetric 3x3 matrix.
/// Construction rejects non-finite entries; the mirrored entries share
/// storage, so the materialized matrix is exactly symmetric.
struct SymMat3 {
  double a11, a12, a13, a22, a23, a33;

  SymMat3(double a11_, double a12_, double a13_, double a22_, double a23_, double a33_);

  Mat3 to_mat3() const;
  double max_abs() const;
  double trace() const { return a11 + a22 + a33; }
};

Vec3 operator*(const SymMat3& s, const Vec3& v);

inline double frob_norm(const SymMat3& s) { return frob_norm(s.to_mat3()); }

/// Full spectral factorization: eigenvalues descending, eigenvectors as the
/// columns of V. Construction checks finiteness and the ordering; the
/// orthogonality and trace bounds are solver postconditions checked in tests.
struct EigenDecomp3 {
  std::array<double, 3> lambda;
  Rot3 V;

  EigenDecomp3(const std::array<double, 3>& lambda_, const Rot3& v);
};

}  // namespace arrow3
