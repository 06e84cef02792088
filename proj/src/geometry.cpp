#include "ehl/geometry.hpp"

#include <cmath>

namespace ehl {

std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::half_line: return "half_line";
        case DomainKind::ball_complement: return "ball_complement";
        case DomainKind::full_space: return "full_space";
    }
    return "?";
}

DomainKind domain_kind_from_string(const std::string& s) {
    if (s == "half_line") return DomainKind::half_line;
    if (s == "ball_complement") return DomainKind::ball_complement;
    if (s == "full_space") return DomainKind::full_space;
    throw std::invalid_argument("unknown domain kind '" + s + "'");
}

double ExteriorDomain::boundary() const {
    switch (kind) {
        case DomainKind::half_line: return left_endpoint;
        case DomainKind::ball_complement: return hole_radius;
        case DomainKind::full_space: return 0.0;
    }
    return 0.0;
}

ExteriorDomain make_domain(DomainKind kind, int dim, double param) {
    ExteriorDomain d;
    d.kind = kind;
    d.dim = dim;
    switch (kind) {
        case DomainKind::half_line:
            if (dim != 1)
                throw std::invalid_argument("half_line requires d = 1");
            d.left_endpoint = param;
            break;
        case DomainKind::ball_complement:
            if (dim < 2)
                throw std::invalid_argument(
                    "ball_complement requires d >= 2 (the d = 1 complement is disconnected)");
            if (!(param > 0.0))
                throw std::invalid_argument("ball_complement requires hole radius R > 0");
            d.hole_radius = param;
            break;
        case DomainKind::full_space:
            if (dim < 1) throw std::invalid_argument("full_space requires d >= 1");
            break;
    }
    return d;
}

bool HarmonicProfile::contains(double r) const {
    switch (domain.kind) {
        case DomainKind::half_line: return r >= domain.left_endpoint;
        case DomainKind::ball_complement: return r >= domain.hole_radius;
        case DomainKind::full_space: return r >= 0.0;
    }
    return false;
}

double HarmonicProfile::phi(double r) const {
    const double tol = 1e-12 * (1.0 + std::abs(domain.boundary()));
    switch (domain.kind) {
        case DomainKind::half_line:
            if (r < domain.left_endpoint - tol)
                throw std::domain_error("phi: point left of the half-line endpoint");
            return std::max(0.0, r - domain.left_endpoint);
        case DomainKind::ball_complement: {
            const double R = domain.hole_radius;
            if (r < R - tol) throw std::domain_error("phi: point inside the hole");
            if (r <= R) return 0.0;
            if (domain.dim == 2) return std::log(r / R);
            return 1.0 - std::pow(r / R, 2.0 - domain.dim);
        }
        case DomainKind::full_space:
            if (r < 0.0) throw std::domain_error("phi: negative radius");
            return 1.0;
    }
    return 0.0;
}

double HarmonicProfile::grad(double r) const {
    const double tol = 1e-12 * (1.0 + std::abs(domain.boundary()));
    switch (domain.kind) {
        case DomainKind::half_line:
            if (r < domain.left_endpoint - tol)
                throw std::domain_error("grad_phi: point left of the half-line endpoint");
            return 1.0;
        case DomainKind::ball_complement: {
            const double R = domain.hole_radius;
            const int d = domain.dim;
            if (r < R - tol) throw std::domain_error("grad_phi: point inside the hole");
            if (d == 2) return 1.0 / r;
            return (d - 2) * std::pow(R, d - 2) * std::pow(r, 1.0 - d);
        }
        case DomainKind::full_space:
            return 0.0;
    }
    return 0.0;
}

double HarmonicProfile::second(double r) const {
    switch (domain.kind) {
        case DomainKind::half_line:
            return 0.0;
        case DomainKind::ball_complement: {
            const double R = domain.hole_radius;
            const int d = domain.dim;
            if (d == 2) return -1.0 / (r * r);
            return (d - 2) * (1.0 - d) * std::pow(R, d - 2) * std::pow(r, -static_cast<double>(d));
        }
        case DomainKind::full_space:
            return 0.0;
    }
    return 0.0;
}

double HarmonicProfile::cstar() const {
    if (domain.dim < 3)
        throw std::invalid_argument("cstar is defined only in dimension d >= 3");
    if (domain.kind == DomainKind::full_space) return 0.0;
    return std::pow(domain.hole_radius, domain.dim - 2);
}

HarmonicProfile make_profile(const ExteriorDomain& dom) { return HarmonicProfile{dom}; }

double check_harmonicity(const HarmonicProfile& p, const std::vector<double>& grid) {
    if (grid.size() < 3) return 0.0;
    const int d = p.domain.dim;
    double worst = 0.0;
    std::vector<double> vals(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) vals[i] = p.phi(grid[i]);
    for (size_t i = 1; i + 1 < grid.size(); ++i) {
        const double rm = 0.5 * (grid[i - 1] + grid[i]);
        const double rp = 0.5 * (grid[i] + grid[i + 1]);
        const double flux_m = std::pow(rm, d - 1) * (vals[i] - vals[i - 1]) / (grid[i] - grid[i - 1]);
        const double flux_p = std::pow(rp, d - 1) * (vals[i + 1] - vals[i]) / (grid[i + 1] - grid[i]);
        const double resid = (flux_p - flux_m) / (rp - rm);
        worst = std::max(worst, std::abs(resid));
    }
    return worst;
}

}  // namespace ehl
