// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/secular.hpp"

#include <algorithm>
#include <cmath>

namespace arrow3 {

ReducedArrow::ReducedArrow(double abar_, double beta1_, double beta2_, double gbar_)
    : abar(abar_), beta1(beta1_), beta2(beta2_), gbar(gbar_) {
  for (double v : {abar, beta1, beta2, gbar}) {
    if (!std::isfinite(v)) throw std::invalid_argument("ReducedArrow: non-finite entry");
  }
  if (!(abar > 0.0)) throw std::invalid_argument("ReducedArrow: abar must be positive");
  if (beta1 == 0.0 || beta2 == 0.0)
    throw std::invalid_argument("ReducedArrow: couplings must be nonzero");
}

namespace {

void check_pole(double x, double abar) {
  if (x == 0.0 || x == -abar) throw std::domain_error("spectral function: pole input");
}

}  // namespace

double spectral_f(double x, double abar, double beta1, double beta2, double gbar) {
  check_pole(x, abar);
  return x - gbar - (beta1 * beta1) / x - (beta2 * beta2) / (x + abar);
}

double spectral_f(double x, const ReducedArrow& a) {
  return spectral_f(x, a.abar, a.beta1, a.beta2, a.gbar);
}

double spectral_fp(double x, double abar, double beta1, double beta2, double gbar) {
  (void)gbar;
  check_pole(x, abar);
  const double p1 = beta1 / x;
  const double p2 = beta2 / (x + abar);
  return 1.0 + p1 * p1 + p2 * p2;
}

double spectral_fp(double x, const ReducedArrow& a) {
  return spectral_fp(x, a.abar, a.beta1, a.beta2, a.gbar);
}

namespace {

// Positive zero of x - g - bsq/x, i.e. g/2 + sqrt((g/2)^2 + bsq), with the
// conjugate form for g < 0 so the subtraction never cancels.
double pick_function_root(double g, double bsq) {
  const double q = 0.5 * g;
  const double r = std::sqrt(q * q + bsq);
  if (g < 0.0) return bsq / (r - q);
  return q + r;
}

}  // namespace

double bg_start(const ReducedArrow& a) {
  return pick_function_root(a.gbar, a.beta1 * a.beta1 + a.beta2 * a.beta2);
}

double newton_start(const ReducedArrow& a) {
  return pick_function_root(a.gbar, a.beta1 * a.beta1);
}

namespace {

// Double-double helpers for one compensated evaluation of f. The plain
// evaluation carries absolute noise near eps times its largest term, so the
// two finders would otherwise stop anywhere inside that noise band.
struct Dd {
  double hi, lo;
};

Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

Dd dd_div(Dd n, Dd d) {
  const double q0 = n.hi / d.hi;
  const double r = std::fma(-q0, d.hi, n.hi) + n.lo - q0 * d.lo;
  return two_sum(q0, r / d.hi);
}

double spectral_f_compensated(double x, const ReducedArrow& a) {
  const Dd q1 = dd_div(two_prod(a.beta1, a.beta1), Dd{x, 0.0});
  const Dd q2 = dd_div(two_prod(a.beta2, a.beta2), two_sum(x, a.abar));
  Dd f = two_sum(x, -a.gbar);
  f = dd_add(f, Dd{-q1.hi, -q1.lo});
  f = dd_add(f, Dd{-q2.hi, -q2.lo});
  return f.hi + f.lo;
}

// One guarded Newton correction with the compensated residual. Both finders
// return through this, so their roots land within a few ulp of the exact
// zero regardless of which side the iteration stopped on, while staying
// inside the bracket [newton_start, bg_start].
double refine_root(double x, const ReducedArrow& a) {
  const double next = x - spectral_f_compensated(x, a) / spectral_fp(x, a);
  if (!std::isfinite(next) || next <= 0.0) return x;
  return std::clamp(next, newton_start(a), bg_start(a));
}

}  // namespace

BgCoefficients bg_coefficients(double xj, const ReducedArrow& arrow) {
  check_pole(xj, arrow.abar);
  const double f = spectral_f(xj, arrow);
  const double fp = spectral_fp(xj, arrow);
  const double b2sq = arrow.beta2 * arrow.beta2;
  const double ratio = xj / (xj + arrow.abar);
  const double denom = xj + arrow.abar;

  BgCoefficients c;
  c.omega1 = arrow.beta1 * arrow.beta1 + b2sq * ratio * ratio * ratio;
  c.omega0 = 1.0 + b2sq * arrow.abar / (denom * denom * denom);
  c.sigma = c.omega0 * xj - c.omega1 / xj - f;
  c.a = -c.omega0 / xj;
  c.b = fp + f / xj;
  c.f = f;
  return c;
}

double bg_step(double xj, const ReducedArrow& a) {
  const BgCoefficients c = bg_coefficients(xj, a);
  // Increment quadratic a*D^2 + b*D - f = 0, smaller root in the stable
  // form; the radicand is clamped because rounding can push it a hair
  // below zero at convergence.
  const double two_f_over_b = 2.0 * c.f / c.b;
  const double radicand = 1.0 + (2.0 * c.a / c.b) * two_f_over_b;
  const double delta = two_f_over_b / (1.0 + std::sqrt(std::max(radicand, 0.0)));
  double next = xj - delta;
  if (next < 0.5 * xj) {
    // The increment cancels most of xj, which happens when the root lies
    // orders of magnitude below the iterate (nearly vanishing beta1). Solve
    // the interpolant omega0 x^2 - sigma x - omega1 = 0 for its positive
    // root directly; both branches keep like-signed additions only, so the
    // result holds relative accuracy at any step size.
    const double disc = std::sqrt(c.sigma * c.sigma + 4.0 * c.omega0 * c.omega1);
    next = c.sigma > 0.0 ? (c.sigma + disc) / (2.0 * c.omega0)
                         : 2.0 * c.omega1 / (disc - c.sigma);
  }
  if (!std::isfinite(next)) throw InternalFaultError("bg_step: non-finite iterate");
  return next;
}

ZeroFinderResult rightmost_bg(const ReducedArrow& a, double c_term, int max_iter) {
  ZeroFinderResult res;
  double x = bg_start(a);
  res.history.push_back(x);
  for (int j = 0; j <= max_iter; ++j) {
    const double f = spectral_f(x, a);
    const double fp = spectral_fp(x, a);
    if (f / fp < c_term * kEps * x) {
      res.root = refine_root(x, a);
      res.iterations = j;
      return res;
    }
    if (j == max_iter) break;
    const double next = bg_step(x, a);
    if (next >= x || next <= 0.0) {  // rounding stall at convergence
      res.root = refine_root(x, a);
      res.iterations = j;
      return res;
    }
    x = next;
    res.history.push_back(x);
  }
  throw IterationLimitError("rightmost_bg: no convergence within iteration budget");
}

ZeroFinderResult rightmost_newton(const ReducedArrow& a, double c_term, int max_iter) {
  ZeroFinderResult res;
  double x = newton_start(a);
  res.history.push_back(x);
  for (int j = 0; j <= max_iter; ++j) {
    const double f = spectral_f(x, a);
    if (std::abs(f) < c_term * kEps * x) {
      res.root = refine_root(x, a);
      res.iterations = j;
      return res;
    }
    if (j == max_iter) break;
    const double next = x - f / spectral_fp(x, a);
    if (!std::isfinite(next)) throw InternalFaultError("rightmost_newton: non-finite iterate");
    if (next <= x) {  // rounding stall at convergence
      res.root = refine_root(x, a);
      res.iterations = j;
      return res;
    }
    x = next;
    res.history.push_back(x);
  }
  throw IterationLimitError("rightmost_newton: no convergence within iteration budget");
}

}  // namespace arrow3
