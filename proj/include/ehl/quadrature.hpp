#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehl {

// Thrown when adaptive refinement cannot reach the requested tolerance.
// The message carries the achieved error estimate.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // error estimate
    int intervals = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval [a, b].
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        const QuadOptions& opt = {});

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

// Integrate over [breaks.front(), breaks.back()] with the interior points as
// initial panel boundaries. Useful when the integrand has known structure
// (boundary layers, kinks) at specific locations.
QuadResult integrate_panels(const std::function<double(double)>& f,
                            const std::vector<double>& breaks, const QuadOptions& opt = {});

// Gaussian integrands are truncated this many standard deviations out;
// the omitted tail is far below the quadrature tolerance.
inline constexpr double kGaussianTailCut = 12.0;

// Surface measure of the unit sphere S^{d-1} in R^d (2, 2*pi, 4*pi, ...).
double unit_sphere_area(int d);

}  // namespace ehl
