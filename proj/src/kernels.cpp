#include "ehl/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace ehl {

double log_gaussian(int d, double radius) {
    return -0.5 * d * std::log(2.0 * M_PI) - 0.5 * radius * radius;
}

double gaussian(int d, double radius) { return std::exp(log_gaussian(d, radius)); }

double log_heat_gamma(int d, double t, double radius) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_gamma requires t > 0");
    return -0.5 * d * std::log(4.0 * M_PI * t) - radius * radius / (4.0 * t);
}

double heat_gamma(int d, double t, double radius) {
    return std::exp(log_heat_gamma(d, t, radius));
}

double dipole(double t, double x) {
    if (!(t > 0.0)) throw std::invalid_argument("dipole requires t > 0");
    if (x < 0.0) throw std::domain_error("dipole is defined for x >= 0");
    return x / (2.0 * t) * heat_gamma(1, t, x);
}

double halfline_kernel(double t, double x, double y, double x0) {
    if (!(t > 0.0)) throw std::invalid_argument("halfline_kernel requires t > 0");
    const double tol = 1e-12 * (1.0 + std::abs(x0));
    if (x < x0 - tol || y < x0 - tol)
        throw std::domain_error("halfline_kernel: point outside (x0, inf)");
    const double X = std::max(0.0, x - x0);
    const double Y = std::max(0.0, y - x0);
    // Gamma(t,x-y) - Gamma(t,x+y-2x0) = Gamma(t,x-y) * (1 - exp(-XY/t));
    // the expm1 form stays accurate when XY/t is tiny.
    return heat_gamma(1, t, x - y) * (-std::expm1(-X * Y / t));
}

namespace {

// |Gamma_d(t, r) - Gamma_d(t, rho)| without cancellation for nearby radii.
double abs_gamma_diff(int d, double t, double r, double rho) {
    const double la = log_heat_gamma(d, t, r);
    const double lb = log_heat_gamma(d, t, rho);
    const double hi = std::max(la, lb);
    const double lo = std::min(la, lb);
    return std::exp(hi) * (-std::expm1(lo - hi));
}

double shift_integral_1d(double t, double v, const QuadOptions& opt) {
    const double w = kGaussianTailCut * std::sqrt(2.0 * t);
    const double lo = std::min(0.0, v) - w;
    const double hi = std::max(0.0, v) + w;
    auto f = [&](double x) {
        return x * x * abs_gamma_diff(1, t, std::abs(x), std::abs(x - v));
    };
    // The two Gaussians cross once, at x = v/2.
    return integrate_panels(f, {lo, 0.5 * v, hi}, opt).value;
}

double shift_integral_radial(int d, double t, double v, const QuadOptions& opt) {
    const double rcut = v + kGaussianTailCut * std::sqrt(2.0 * t);
    const double omega_slice = unit_sphere_area(d - 1);

    QuadOptions inner;
    inner.abs_tol = 1e-14 * std::pow(4.0 * M_PI * t, -0.5 * d) * std::max(1.0, M_PI);
    inner.rel_tol = 1e-11;
    inner.max_intervals = 800;

    auto theta_integral = [&](double r) {
        auto g = [&](double theta) {
            const double c = std::cos(theta);
            const double rho2 = r * r + v * v - 2.0 * r * v * c;
            const double rho = std::sqrt(std::max(0.0, rho2));
            const double s = std::sin(theta);
            const double ang = d == 2 ? 1.0 : std::pow(s, d - 2);
            return ang * abs_gamma_diff(d, t, r, rho);
        };
        std::vector<double> breaks{0.0, M_PI};
        const double cstar = v / (2.0 * r);
        if (cstar < 1.0) breaks = {0.0, std::acos(cstar), M_PI};  // sign change of the difference
        return integrate_panels(g, breaks, inner).value;
    };

    QuadOptions outer = opt;
    outer.rel_tol = std::max(opt.rel_tol, 1e-9);
    auto f = [&](double r) {
        return omega_slice * std::pow(r, d + 1) * theta_integral(r);
    };
    return integrate_panels(f, {0.0, 0.5 * v, v, rcut}, outer).value;
}

}  // namespace

double gamma_shift_weighted_l1(int d, double t, double v, const QuadOptions& opt) {
    if (!(t > 0.0)) throw std::invalid_argument("gamma_shift_weighted_l1 requires t > 0");
    if (v < 0.0) throw std::invalid_argument("gamma_shift_weighted_l1 requires v >= 0");
    if (v == 0.0) return 0.0;
    if (d == 1) return shift_integral_1d(t, v, opt);
    return shift_integral_radial(d, t, v, opt);
}

}  // namespace ehl
