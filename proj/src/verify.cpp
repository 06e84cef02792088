#include "ehl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ehl/kernels.hpp"
#include "ehl/quadrature.hpp"

namespace ehl {

std::string to_string(ErrorMode m) {
    switch (m) {
        case ErrorMode::weighted_l1: return "weighted_l1";
        case ErrorMode::plain_l1: return "plain_l1";
        case ErrorMode::uniform_rel: return "uniform_rel";
    }
    return "?";
}

double error_norm(const RadialField& u, const HarmonicProfile& p, double m_phi, ErrorMode mode,
                  double k_t) {
    const double t = u.time;
    if (t < 2.0) throw std::invalid_argument("error_norm is defined for t >= 2");
    const int d = u.domain.dim;
    const double scale = angular_measure(u.domain);

    double phimax = 0.0;
    for (int i = 0; i < u.grid.size(); ++i) phimax = std::max(phimax, p.phi(u.grid.r[i]));
    const double phifloor = 1e-9 * phimax;

    double acc = 0.0;
    for (int i = 0; i < u.grid.size(); ++i) {
        const double r = u.grid.r[i];
        const double ph = p.phi(r);
        const double target = k_t * m_phi * ph * heat_gamma(d, t, r);
        const double diff = std::abs(u.u[i] - target);
        switch (mode) {
            case ErrorMode::weighted_l1:
                acc += ph * diff * u.grid.qw[i];
                break;
            case ErrorMode::plain_l1:
                acc += diff * u.grid.qw[i];
                break;
            case ErrorMode::uniform_rel:
                if (ph > phifloor) acc = std::max(acc, diff / ph);
                break;
        }
    }
    return mode == ErrorMode::uniform_rel ? acc : acc * scale;
}

KernelError kernel_error_1d(double t, double x, double y, double x0) {
    if (t < 2.0) throw std::invalid_argument("kernel_error_1d is defined for t >= 2");
    const double X = x - x0, Y = y - x0;
    if (X < 0.0 || Y < 0.0) throw std::domain_error("kernel_error_1d: point outside the domain");
    KernelError out;
    const double p = halfline_kernel(t, x, y, x0);
    out.error = std::abs(p - X * Y / t * heat_gamma(1, t, x - y));
    out.comparator = X * Y * (1.0 + std::min(X, Y)) / (t * t);
    return out;
}

RateFit fit_rate(const RateSeries& s, double t_lo, double t_hi) {
    std::vector<double> lx, ly;
    for (size_t i = 0; i < s.t.size(); ++i) {
        if (s.t[i] < t_lo || s.t[i] > t_hi) continue;
        if (i > 0 && s.t[i] <= s.t[i - 1])
            throw std::invalid_argument("fit_rate: times must be strictly increasing");
        if (!(s.value[i] > 0.0))
            throw std::invalid_argument("fit_rate: nonpositive value inside the fit window");
        lx.push_back(std::log(s.t[i]));
        ly.push_back(std::log(s.value[i]));
    }
    if (lx.size() < 5) throw std::invalid_argument("fit_rate: need at least 5 points in window");
    const size_t n = lx.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    RateFit fit;
    fit.alpha = sxy / sxx;
    fit.prefactor = std::exp(my - fit.alpha * mx);
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    for (size_t i = 0; i < n; ++i) {
        const double resid = std::abs(ly[i] - (my + fit.alpha * (lx[i] - mx)));
        fit.max_log_residual = std::max(fit.max_log_residual, resid);
    }
    return fit;
}

double gaussian_negative_moment(int d) {
    if (d < 3) throw std::invalid_argument("gaussian_negative_moment applies in d >= 3");
    auto f = [&](double r) { return std::pow(r, 2 - d) * gaussian(d, r) * std::pow(r, d - 1); };
    return integrate(f, 0.0, kGaussianTailCut, {1e-13, 1e-12, 4000}) * unit_sphere_area(d);
}

double mass_expansion_constant(const HarmonicProfile& p) {
    const int d = p.domain.dim;
    // Coefficient of t^{1-d/2} in the total-mass expansion:
    // int Gamma(t,x)|x|^{2-d} dx = t^{1-d/2} int Gamma(1,z)|z|^{2-d} dz, and
    // Gamma(1,z) = 2^{-d/2} G(z/sqrt(2)) turns the Gaussian moment into
    // 2^{1-d/2} int G(y)|y|^{2-d} dy.
    return p.cstar() * std::pow(2.0, 1.0 - 0.5 * d) * gaussian_negative_moment(d);
}

RateSeries mass_asymptote_residual(const RateSeries& mass, const HarmonicProfile& p,
                                   double m_phi) {
    const int d = p.domain.dim;
    RateSeries out;
    out.label = "mass_residual";
    out.t = mass.t;
    out.value.resize(mass.value.size());
    const double K = d >= 3 ? mass_expansion_constant(p) : 0.0;
    for (size_t i = 0; i < mass.t.size(); ++i) {
        const double t = mass.t[i];
        const double m = mass.value[i];
        if (d >= 3)
            out.value[i] = std::abs(m - m_phi - K * m_phi * std::pow(t, 1.0 - 0.5 * d));
        else if (d == 2)
            out.value[i] = std::abs(m - 2.0 * m_phi / std::log(t)) * std::abs(std::log(t));
        else
            out.value[i] = std::abs(m - m_phi / std::sqrt(M_PI * t)) * t;
    }
    return out;
}

SplitBoundCheck split_bound(const std::vector<double>& t, const std::vector<double>& e,
                            const std::vector<double>& shape) {
    if (t.size() != e.size() || t.size() != shape.size() || t.size() < 4)
        throw std::invalid_argument("split_bound: need matched series with >= 4 points");
    const double mid = 0.5 * (std::log(t.front()) + std::log(t.back()));
    SplitBoundCheck out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (!(shape[i] > 0.0)) throw std::invalid_argument("split_bound: shape must be positive");
        const double ratio = e[i] / shape[i];
        if (std::log(t[i]) <= mid)
            out.c_fit = std::max(out.c_fit, ratio);
        else
            out.val_max_ratio = std::max(out.val_max_ratio, ratio);
    }
    out.pass = out.val_max_ratio <= out.c_fit;
    return out;
}

}  // namespace ehl
