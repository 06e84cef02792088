#pragma once

#include <string>
#include <vector>

#include "ehl/grid.hpp"

namespace ehl {

enum class ErrorMode { weighted_l1, plain_l1, uniform_rel };

std::string to_string(ErrorMode m);

// Distance of u(t,.) from the asymptotic profile k_t m_phi phi Gamma(t,.):
// phi-weighted L1, plain L1, or the phi-relative sup over the grid.
double error_norm(const RadialField& u, const HarmonicProfile& p, double m_phi, ErrorMode mode,
                  double k_t);

struct KernelError {
    double error;       // |p_Omega - phi(x)phi(y)/t Gamma(t, x-y)|
    double comparator;  // phi(x)phi(y)(1 + min - x0)/t^2
};

KernelError kernel_error_1d(double t, double x, double y, double x0);

struct RateSeries {
    std::string label;
    std::vector<double> t, value;
};

struct RateFit {
    double alpha = 0.0;          // fitted exponent
    double prefactor = 0.0;      // exp(intercept)
    double t_lo = 0.0, t_hi = 0.0;
    double max_log_residual = 0.0;
};

// Least-squares line in (log t, log value) over the window.
RateFit fit_rate(const RateSeries& s, double t_lo, double t_hi);

// Scaled residuals of the total mass against its leading asymptote:
// |m - m_phi - K m_phi t^{1-d/2}| (d>=3, K = C* int G |y|^{2-d}),
// |m - 2 m_phi/log t| log t (d=2), |m - m_phi (pi t)^{-1/2}| t (d=1).
RateSeries mass_asymptote_residual(const RateSeries& mass, const HarmonicProfile& p,
                                   double m_phi);

// int_{R^d} G(y)|y|^{2-d} dy (sqrt(2/pi) in d = 3).
double gaussian_negative_moment(int d);

// K in the expansion mass = m_phi + K m_phi t^{1-d/2} + o(.), d >= 3:
// C* 2^{1-d/2} int G(y)|y|^{2-d} dy = C* int Gamma(1,z)|z|^{2-d} dz.
double mass_expansion_constant(const HarmonicProfile& p);

// Fit a bound constant C = max(e / shape) over the first half of the window
// (split at the log-t midpoint) and validate max(e / shape) <= C on the rest.
struct SplitBoundCheck {
    double c_fit = 0.0;
    double val_max_ratio = 0.0;
    bool pass = false;
};

SplitBoundCheck split_bound(const std::vector<double>& t, const std::vector<double>& e,
                            const std::vector<double>& shape);

}  // namespace ehl
