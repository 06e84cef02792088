#pragma once

#include <vector>

#include "ehl/grid.hpp"
#include "ehl/quadrature.hpp"

namespace ehl {

// Self-similar time tau = log(2t+1)/2 and scale factor e^tau = sqrt(2t+1).
double tau_of_t(double t);

// Exact half-line solution by quadrature of the initial datum against the
// image kernel. One uniform Simpson grid per output time, sized to the
// Gaussian support. Node values are resolved in relative terms so that
// log-ratio functionals stay clean far into the tails.
std::vector<RadialField> solve_exact_halfline(const InitialDatum& u0, double x0,
                                              const std::vector<double>& times,
                                              int n_nodes = 4001,
                                              const QuadOptions& opt = {1e-250, 1e-10, 2000});

// Crank-Nicolson finite differences for the radial heat equation on
// ball complements and the full space (d >= 2). Dirichlet u = 0 at the hole
// boundary and at r_max; no-flux at r = 0 for the full space. dt <= 0 picks
// the grid's nominal spacing.
std::vector<RadialField> solve_radial_fd(const ExteriorDomain& dom, const InitialDatum& u0,
                                         const std::vector<double>& times,
                                         const RadialGrid& grid, double dt);

// g(tau, y) = e^{d tau} phi(x) u(t, x) / m_phi at y = x e^{-tau}.
// The returned field carries tau in its time slot and integrates to
// harmonic_mass(u)/m_phi.
RadialField self_similar(const RadialField& u, const HarmonicProfile& p, double m_phi);

// Default outer truncation radius: sqrt(2 t_final) * sqrt(2 ln(1/eps_tail))
// past the datum support, with eps_tail = 1e-12.
double default_r_max(const ExteriorDomain& dom, const InitialDatum& u0, double t_final);

}  // namespace ehl
