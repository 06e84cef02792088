#pragma once

#include "ehl/quadrature.hpp"

namespace ehl {

// Standard Gaussian density in R^d evaluated at |y| = radius.
double gaussian(int d, double radius);
double log_gaussian(int d, double radius);

// Fundamental solution of the heat equation at |x| = radius,
// (4 pi t)^{-d/2} exp(-r^2 / 4t). Evaluated in log space.
double heat_gamma(int d, double t, double radius);
double log_heat_gamma(int d, double t, double radius);

// Dipole solution -d/dx Gamma(t, x) = x/(2t) Gamma(t, x) on the half-line.
double dipole(double t, double x);

// Dirichlet heat kernel of (x0, inf) by images:
// Gamma(t, x-y) - Gamma(t, x+y-2x0). Symmetric, nonnegative.
double halfline_kernel(double t, double x, double y, double x0);

// int_{R^d} |x|^2 |Gamma(t,x) - Gamma(t,x-v)| dx for a displacement of
// magnitude v. Reduced to a (radius, angle) quadrature for d >= 2.
double gamma_shift_weighted_l1(int d, double t, double v, const QuadOptions& opt = {});

}  // namespace ehl
