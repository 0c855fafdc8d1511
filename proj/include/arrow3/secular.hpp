// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0
//
// The spectral function of a fully reduced arrow and two zero finders for
// its unique positive root: a cubically convergent rational interpolation
// iteration descending from the right, and Newton ascending from the left.

#pragma once

#include <vector>

#include "arrow3/core.hpp"

namespace arrow3 {

/// Shifted "fully reduced arrow"
///   [   0      0     beta1 ]
///   [   0    -abar   beta2 ]
///   [ beta1  beta2   gbar  ]
/// with abar > 0 and both couplings nonzero. Its rightmost eigenvalue is the
/// unique positive zero of the spectral function.
struct ReducedArrow {
  double abar, beta1, beta2, gbar;

  ReducedArrow(double abar_, double beta1_, double beta2_, double gbar_);

  SymMat3 to_sym() const { return SymMat3(0.0, 0.0, beta1, -abar, beta2, gbar); }
};

struct ZeroFinderResult {
  double root = 0.0;       // > 0
  int iterations = 0;      // steps taken after the starting guess
  std::vector<double> history;  // iterates including the start; diagnostic
};

/// Termination constant shared by both finders: stop once the error bound
/// drops below C * eps * x.
inline constexpr double kDefaultTermC = 4.0;

inline constexpr int kDefaultBgMaxIter = 20;
inline constexpr int kDefaultNewtonMaxIter = 100;

/// f(x) = x - gbar - beta1^2/x - beta2^2/(x + abar), evaluated as written.
/// Raw-coefficient overload for tests that need a vanishing coupling.
double spectral_f(double x, double abar, double beta1, double beta2, double gbar);
double spectral_f(double x, const ReducedArrow& a);

/// f'(x) = 1 + beta1^2/x^2 + beta2^2/(x + abar)^2; at least one everywhere.
double spectral_fp(double x, double abar, double beta1, double beta2, double gbar);
double spectral_fp(double x, const ReducedArrow& a);

/// Starting point to the right of the root: the positive zero of the
/// limiting interpolant x - gbar - (beta1^2 + beta2^2)/x, computed through
/// the conjugate when gbar < 0 to avoid cancellation.
double bg_start(const ReducedArrow& a);

/// Coefficients of the rational interpolant omega0*x - sigma - omega1/x
/// matching f, f', f'' at xj, plus the increment quadratic a*D^2 + b*D - f.
/// sigma is diagnostic only; the step consumes just a and b.
struct BgCoefficients {
  double omega0, omega1, sigma;
  double a, b, f;
};
BgCoefficients bg_coefficients(double xj, const ReducedArrow& arrow);

/// One interpolation step from xj (expected right of the root): returns
/// x_{j+1} = xj - Delta with Delta from the stable quadratic form.
/// Throws InternalFaultError on a non-finite intermediate.
double bg_step(double xj, const ReducedArrow& a);

/// Iterates bg_step from bg_start until f/f' < C eps x. The history is
/// non-increasing; a rounding-induced uphill or nonpositive step terminates
/// the loop. The returned root is the final iterate after one compensated
/// Newton correction, so it sits within a few ulp of the exact zero and may
/// differ from history.back() by the width of the evaluation noise band.
ZeroFinderResult rightmost_bg(const ReducedArrow& a, double c_term = kDefaultTermC,
                              int max_iter = kDefaultBgMaxIter);

/// Starting point to the left of the root: where x - gbar - beta1^2/x meets
/// the remaining negative pole term; conjugate form when gbar < 0.
double newton_start(const ReducedArrow& a);

/// Newton iteration from newton_start until |f| < C eps x. Monotone
/// non-decreasing; a rounding-induced downhill step terminates the loop.
/// The returned root carries the same compensated correction as
/// rightmost_bg, so the two finders agree to a few ulp.
ZeroFinderResult rightmost_newton(const ReducedArrow& a, double c_term = kDefaultTermC,
                                  int max_iter = kDefaultNewtonMaxIter);

}  // namespace arrow3
