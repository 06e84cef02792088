#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ehl {

enum class DomainKind { half_line, ball_complement, full_space };

std::string to_string(DomainKind k);
DomainKind domain_kind_from_string(const std::string& s);

// An exterior domain: the half-line (x0, inf), the complement of the ball
// of radius R centred at the origin, or all of R^d.
struct ExteriorDomain {
    DomainKind kind = DomainKind::full_space;
    int dim = 1;
    double hole_radius = 0.0;    // ball_complement only
    double left_endpoint = 0.0;  // half_line only

    // Inner boundary coordinate of the radial grid: R, x0, or 0.
    double boundary() const;
};

// param is R for ball_complement, x0 for half_line, ignored for full_space.
ExteriorDomain make_domain(DomainKind kind, int dim, double param = 0.0);

// The positive harmonic function vanishing on the hole boundary:
// x - x0 (d=1), log(r/R) (d=2), 1 - (r/R)^{2-d} (d>=3); 1 on full space.
struct HarmonicProfile {
    ExteriorDomain domain;

    double phi(double r) const;
    double grad(double r) const;    // radial derivative phi'
    double second(double r) const;  // phi''
    double cstar() const;           // lim (1-phi) r^{d-2}, d >= 3 only

    bool contains(double r) const;
};

HarmonicProfile make_profile(const ExteriorDomain& dom);

// Max |(r^{d-1} phi')'| over the interior of the grid, with the flux formed
// by finite differences of phi values. Pure truncation error for the closed
// forms; identically zero in d = 1.
double check_harmonicity(const HarmonicProfile& p, const std::vector<double>& grid);

}  // namespace ehl
