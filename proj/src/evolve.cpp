#include "ehl/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ehl/kernels.hpp"

namespace ehl {

double tau_of_t(double t) {
    if (t < 0.0) throw std::invalid_argument("tau_of_t requires t >= 0");
    return 0.5 * std::log1p(2.0 * t);
}

double default_r_max(const ExteriorDomain& dom, const InitialDatum& u0, double t_final) {
    const double eps_tail = 1e-12;
    const double spread = std::sqrt(2.0 * t_final) * std::sqrt(2.0 * std::log(1.0 / eps_tail));
    return std::max(u0.support_hi(), dom.boundary()) + spread;
}

std::vector<RadialField> solve_exact_halfline(const InitialDatum& u0, double x0,
                                              const std::vector<double>& times, int n_nodes,
                                              const QuadOptions& opt) {
    const ExteriorDomain dom = make_domain(DomainKind::half_line, 1, x0);
    const double a = std::max(x0, u0.support_lo());
    const double b = u0.support_hi();
    if (!(b > a)) throw std::invalid_argument("initial datum lies outside the half-line");

    auto density = datum_evaluator(u0, dom);
    std::vector<RadialField> out;
    out.reserve(times.size());
    for (double t : times) {
        if (!(t > 0.0)) throw std::invalid_argument("solve_exact_halfline requires times > 0");
        const double hi = std::max(b, x0) + kGaussianTailCut * std::sqrt(2.0 * t);
        RadialField f;
        f.domain = dom;
        f.grid = make_uniform_grid(1, x0, hi, n_nodes);
        f.time = t;
        f.u.resize(f.grid.size());
        for (int i = 0; i < f.grid.size(); ++i) {
            const double x = f.grid.r[i];
            if (x <= x0) {
                f.u[i] = 0.0;
                continue;
            }
            auto integrand = [&](double y) { return halfline_kernel(t, x, y, x0) * density(y); };
            f.u[i] = integrate(integrand, a, b, opt);
        }
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

// Exact two-point transmissibility 1 / int_{r_i}^{r_j} s^{1-d} ds. The
// closed-form harmonic profile then lies in the kernel of the discrete
// operator, which conserves the discrete harmonic mass to rounding.
double transmissibility(int d, double ri, double rj) {
    if (ri <= 0.0) {
        // Face adjacent to the origin (full space): regular centre, use the
        // consistent face-area / distance form.
        const double face = 0.5 * (ri + rj);
        return std::pow(face, d - 1) / (rj - ri);
    }
    if (d == 1) return 1.0 / (rj - ri);
    if (d == 2) return 1.0 / std::log(rj / ri);
    return (d - 2) / (std::pow(ri, 2 - d) - std::pow(rj, 2 - d));
}

struct Tridiag {
    std::vector<double> a, b, c;  // sub, diag, super
};

void thomas_solve(Tridiag m, std::vector<double>& rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int i = 1; i < n; ++i) {
        const double w = m.a[i] / m.b[i - 1];
        m.b[i] -= w * m.c[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= m.b[n - 1];
    for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - m.c[i] * rhs[i + 1]) / m.b[i];
}

}  // namespace

std::vector<RadialField> solve_radial_fd(const ExteriorDomain& dom, const InitialDatum& u0,
                                         const std::vector<double>& times,
                                         const RadialGrid& grid, double dt) {
    if (dom.dim < 2 || dom.kind == DomainKind::half_line)
        throw std::invalid_argument("solve_radial_fd handles d >= 2 (use the exact 1-D solver)");
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("output times must be ascending");
    const int n = grid.size();
    const int d = dom.dim;
    const bool has_hole = dom.kind == DomainKind::ball_complement;
    if (dt <= 0.0) dt = (grid.r.back() - grid.r.front()) / (n - 1);

    // Face transmissibilities and cell volumes.
    std::vector<double> T(n - 1), V = grid.qw;
    for (int i = 0; i + 1 < n; ++i) T[i] = transmissibility(d, grid.r[i], grid.r[i + 1]);

    std::vector<double> u = sample_datum(u0, dom, grid);
    if (has_hole) u.front() = 0.0;
    u.back() = 0.0;

    // Unknowns: interior nodes, plus the centre node for the full space.
    const int i0 = has_hole ? 1 : 0;
    const int i1 = n - 2;
    const int m = i1 - i0 + 1;
    if (m < 3) throw std::invalid_argument("grid too coarse for the FD solver");

    auto build = [&](double theta_dt, Tridiag& M) {
        M.a.assign(m, 0.0);
        M.b.assign(m, 0.0);
        M.c.assign(m, 0.0);
        for (int i = i0; i <= i1; ++i) {
            const int row = i - i0;
            const double tl = i > 0 ? T[i - 1] : 0.0;  // no inner flux at the centre
            const double tr = T[i];
            M.b[row] = 1.0 + theta_dt * (tl + tr) / V[i];
            if (i > i0) M.a[row] = -theta_dt * tl / V[i];
            if (i < i1) M.c[row] = -theta_dt * tr / V[i];
        }
    };

    auto apply_explicit = [&](double theta_dt, const std::vector<double>& w,
                              std::vector<double>& rhs) {
        for (int i = i0; i <= i1; ++i) {
            const double tl = i > 0 ? T[i - 1] : 0.0;
            const double tr = T[i];
            const double lu = (tr * (w[i + 1] - w[i]) - (i > 0 ? tl * (w[i] - w[i - 1]) : 0.0)) / V[i];
            rhs[i - i0] = w[i] + theta_dt * lu;
        }
    };

    std::vector<RadialField> out;
    out.reserve(times.size());
    auto snapshot = [&](double t) {
        RadialField f;
        f.domain = dom;
        f.grid = grid;
        f.u = u;
        f.time = t;
        out.push_back(std::move(f));
    };

    double t = 0.0;
    size_t next = 0;
    while (next < times.size() && times[next] <= 0.0) snapshot(times[next++]);

    long step = 0;
    double prev_mass = std::numeric_limits<double>::infinity();
    Tridiag M;
    std::vector<double> rhs(m);
    while (next < times.size()) {
        double h = std::min(dt, times[next] - t);
        // Backward-Euler startup damps Crank-Nicolson ringing on rough data.
        const double theta = step < 2 ? 1.0 : 0.5;
        build(theta * h, M);
        apply_explicit((1.0 - theta) * h, u, rhs);
        thomas_solve(M, rhs);
        for (int i = i0; i <= i1; ++i) u[i] = rhs[i - i0];
        t += h;
        ++step;

        if (t >= times[next] - 1e-12 * (1.0 + times[next])) {
            for (double v : u)
                if (!std::isfinite(v))
                    throw std::runtime_error("FD instability (non-finite value) at step " +
                                             std::to_string(step));
            RadialField probe{dom, grid, u, t};
            const double mass = field_integral(probe);
            if (mass > prev_mass * (1.0 + 1e-10) + 1e-14)
                throw std::runtime_error("FD instability (mass grew) at step " +
                                         std::to_string(step));
            prev_mass = mass;
            snapshot(times[next++]);
        }
    }
    return out;
}

RadialField self_similar(const RadialField& u, const HarmonicProfile& p, double m_phi) {
    if (!(m_phi > 0.0)) throw std::invalid_argument("self_similar requires m_phi > 0");
    const double tau = tau_of_t(u.time);
    const double s = std::exp(tau);  // sqrt(2t+1)
    const double sd = std::pow(s, u.domain.dim);
    RadialField g;
    g.domain = u.domain;
    g.time = tau;
    g.grid.rule = u.grid.rule;
    g.grid.r.resize(u.grid.r.size());
    g.grid.qw.resize(u.grid.qw.size());
    g.u.resize(u.u.size());
    for (size_t i = 0; i < u.grid.r.size(); ++i) {
        g.grid.r[i] = u.grid.r[i] / s;
        g.grid.qw[i] = u.grid.qw[i] / sd;
        g.u[i] = sd * p.phi(u.grid.r[i]) * u.u[i] / m_phi;
    }
    return g;
}

}  // namespace ehl
