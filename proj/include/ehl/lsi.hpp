#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "ehl/entropy.hpp"

namespace ehl {

// A positive 1-D density f on (a, inf) with potential Phi = -log f (up to an
// additive constant). All densities here are Gaussian-confined: Phi'' -> 1 at
// infinity, and (log phi) concavity makes Phi'' >= 1 beyond any scan window,
// so min(scanned Phi'', 1) is the true infimum.
struct RadialDensity1D {
    double a = 0.0;        // left endpoint (boundary zero of f), or -inf-like lo
    double lo = 0.0, hi = 0.0;  // scan window
    std::function<double(double)> f;
    std::function<double(double)> potential_dd;  // analytic Phi''; may be empty
    int assembly_dim = 1;
    bool tail_dd_is_one = true;

    double m1() const;
    double m2() const;
};

// f(r) = K_tau r^{d-1} phi(e^tau r)^2 G(r): the 1-D reduction of F_tau.
RadialDensity1D reduced_density(const TransientEquilibrium& eq);

// The tau-independent half-line equilibrium C y^2 e^{-y^2/2} on (0, inf).
RadialDensity1D halfline_equilibrium_density();

// Standard Gaussian weight on the whole line (scan truncated at +-12).
RadialDensity1D gaussian_line_density();

// Phi(r) = -log f(r).
double potential_phi(const RadialDensity1D& d, double r);

// Centred second difference of the potential with a scale-aware step.
double potential_dd_numeric(const RadialDensity1D& d, double r);

// Minimum of Phi'' over the scan window (plus the tail limit when known).
double phi_dd_min(const RadialDensity1D& d, int n = 4096);

// Bakry-Emery lower bound 2 * min Phi''; 0 when convexity fails on the grid.
double bakry_emery_lambda(const RadialDensity1D& d);

// Spectral gap of -(f u')' = lambda f u with natural boundary conditions:
// second-smallest eigenvalue of the conservative tridiagonal discretization,
// found by Sturm bisection.
double poincare_1d(const RadialDensity1D& d, int n = 2000);

// lambda_L(F) >= c (1/lambda_L(f) + m1 max{1/lambda_P, m2/(d-1)}^{1/2})^{-1}.
double radial_lsi_bound(double lambda_l, double lambda_p, double m1, double m2, int d,
                        double c_assembly = 1.0);

// Best available lower bound for the log-Sobolev constant of F_tau:
// 2 in d = 1, the radial assembly otherwise.
double lambda_hat(const HarmonicProfile& p, double tau, double c_assembly = 1.0,
                  int poincare_n = 2000);

struct LsiRow {
    double tau, phidd_min, be_lambda, poincare, assembled;
};

std::vector<LsiRow> lsi_report(const HarmonicProfile& p, const std::vector<double>& taus,
                               double c_assembly = 1.0, int poincare_n = 2000);

// Columns: tau,phidd_min,be_lambda,poincare,assembled_bound
void write_csv(const std::vector<LsiRow>& rows, std::ostream& out);

}  // namespace ehl
