#include "ehl/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ehl/io.hpp"
#include "ehl/kernels.hpp"

namespace ehl {

namespace {

constexpr double kDensityFloor = 1e-300;
constexpr double kRatioCap = 1e300;
constexpr double kFisherRelFloor = 1e-12;

double clamp_pos(double v) { return std::min(std::max(v, kDensityFloor), kRatioCap); }

struct Normalized {
    std::vector<double> g, F;  // unit-mass samples
    double scale = 1.0;        // angular measure
    double mF = 1.0;           // grid mass of the raw equilibrium samples
};

Normalized normalize_pair(const RadialField& g, const TransientEquilibrium& eq) {
    Normalized out;
    out.scale = angular_measure(g.domain);
    const int n = g.grid.size();
    out.g.resize(n);
    out.F.resize(n);
    double mg = 0.0, mF = 0.0;
    for (int i = 0; i < n; ++i) {
        double gi = g.u[i];
        if (gi < -1e-12)
            throw std::invalid_argument("rel_entropy: field has negative values beyond -1e-12");
        gi = std::max(0.0, gi);
        const double Fi = eq.density(g.grid.r[i]);
        out.g[i] = gi;
        out.F[i] = Fi;
        mg += gi * g.grid.qw[i];
        mF += Fi * g.grid.qw[i];
    }
    mg *= out.scale;
    mF *= out.scale;
    if (std::abs(mg - 1.0) > 1e-4)
        throw std::invalid_argument("rel_entropy: field mass deviates from 1 by more than 1e-4");
    if (!(mF > 0.0)) throw std::invalid_argument("rel_entropy: equilibrium has zero grid mass");
    out.mF = mF;
    for (int i = 0; i < n; ++i) {
        out.g[i] /= mg;
        out.F[i] /= mF;
    }
    return out;
}

// e^tau r phi'(e^tau r) / phi(e^tau r), or NaN where phi is at its boundary zero.
double drift_ratio(const TransientEquilibrium& eq, double y) {
    const double x = std::exp(eq.tau) * y;
    const double ph = eq.profile.phi(x);
    if (ph <= 1e-12 * (1.0 + std::abs(x))) return std::numeric_limits<double>::quiet_NaN();
    return std::exp(eq.tau) * y * eq.profile.grad(x) / ph;
}

}  // namespace

double TransientEquilibrium::boundary() const {
    return profile.domain.boundary() * std::exp(-tau);
}

double TransientEquilibrium::density(double y) const {
    const double x = std::exp(tau) * y;
    const double b = profile.domain.boundary();
    if (x < b - 1e-9 * (1.0 + std::abs(b)))
        throw std::domain_error("transient equilibrium evaluated outside Omega_tau");
    const double ph = profile.phi(std::max(x, b));
    return K * ph * ph * gaussian(profile.domain.dim, y);
}

TransientEquilibrium make_equilibrium(const HarmonicProfile& p, double tau) {
    TransientEquilibrium eq;
    eq.profile = p;
    eq.tau = tau;
    eq.K = 1.0 / i_tau(p, tau);
    return eq;
}

double rel_entropy(const RadialField& g, const TransientEquilibrium& eq) {
    Normalized nm = normalize_pair(g, eq);
    double H = 0.0;
    for (int i = 0; i < g.grid.size(); ++i) {
        if (nm.g[i] <= 0.0) continue;  // 0 log 0 = 0
        const double ratio = clamp_pos(nm.g[i]) / clamp_pos(nm.F[i]);
        H += nm.g[i] * std::log(ratio) * g.grid.qw[i];
    }
    return H * nm.scale;
}

double l1_distance(const RadialField& g, const TransientEquilibrium& eq) {
    Normalized nm = normalize_pair(g, eq);
    double s = 0.0;
    for (int i = 0; i < g.grid.size(); ++i)
        s += std::abs(nm.g[i] - nm.F[i]) * g.grid.qw[i];
    return s * nm.scale;
}

double fisher_information(const RadialField& g, const TransientEquilibrium& eq) {
    Normalized nm = normalize_pair(g, eq);
    const int n = g.grid.size();
    double gmax = 0.0;
    for (double v : nm.g) gmax = std::max(gmax, v);
    const double floor = kFisherRelFloor * gmax;

    std::vector<double> s(n, std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i < n; ++i) {
        if (nm.g[i] >= floor && nm.F[i] > 0.0)
            s[i] = std::log(clamp_pos(nm.g[i])) - std::log(clamp_pos(nm.F[i]));
    }
    double fisher = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        if (!std::isfinite(s[i - 1]) || !std::isfinite(s[i]) || !std::isfinite(s[i + 1])) continue;
        const double hm = g.grid.r[i] - g.grid.r[i - 1];
        const double hp = g.grid.r[i + 1] - g.grid.r[i];
        const double ds = (hm * hm * s[i + 1] - hp * hp * s[i - 1] + (hp * hp - hm * hm) * s[i]) /
                          (hm * hp * (hm + hp));
        fisher += nm.g[i] * ds * ds * g.grid.qw[i];
    }
    return fisher * nm.scale;
}

double remainder_R(const RadialField& g, const TransientEquilibrium& eq) {
    Normalized nm = normalize_pair(g, eq);
    double R = 0.0;
    for (int i = 0; i < g.grid.size(); ++i) {
        const double ratio = drift_ratio(eq, g.grid.r[i]);
        if (!std::isfinite(ratio)) continue;  // boundary zero of phi; integrand vanishes there
        R += ratio * (nm.g[i] - nm.F[i]) * g.grid.qw[i];
    }
    return 2.0 * R * nm.scale;
}

double remainder_R_direct(const RadialField& g, const HarmonicProfile& p, double tau,
                          double dtau) {
    if (!(dtau > 0.0) || tau < dtau)
        throw std::invalid_argument("remainder_R_direct requires 0 < dtau <= tau");
    TransientEquilibrium eq = make_equilibrium(p, tau);
    Normalized nm = normalize_pair(g, eq);
    const double Kp = 1.0 / i_tau(p, tau + dtau);
    const double Km = 1.0 / i_tau(p, tau - dtau);
    const double dlogK = (std::log(Kp) - std::log(Km)) / (2.0 * dtau);
    const double b = p.domain.boundary();
    double R = 0.0;
    for (int i = 0; i < g.grid.size(); ++i) {
        if (nm.g[i] <= 0.0) continue;
        const double y = g.grid.r[i];
        const double xp = std::exp(tau + dtau) * y;
        const double xm = std::exp(tau - dtau) * y;
        // Nodes that fall inside the hole of the slightly-earlier domain carry
        // no information; g vanishes at that boundary layer anyway.
        if (xm <= b * (1.0 + 1e-12)) continue;
        const double php = p.phi(xp);
        const double phm = p.phi(xm);
        if (php <= 0.0 || phm <= 0.0) continue;
        const double dlogphi = (std::log(php) - std::log(phm)) / (2.0 * dtau);
        R += nm.g[i] * (dlogK + 2.0 * dlogphi) * g.grid.qw[i];
    }
    return R * nm.scale;
}

double q_bound(const RadialField& g, const TransientEquilibrium& eq) {
    Normalized nm = normalize_pair(g, eq);
    const double e_tau = std::exp(eq.tau);
    const double Khat = eq.K / nm.mF;  // normalization of the renormalized F
    double q = 0.0;
    for (int i = 0; i < g.grid.size(); ++i) {
        const double y = g.grid.r[i];
        const double x = std::max(e_tau * y, eq.profile.domain.boundary());
        const double num = e_tau * y * eq.profile.grad(x);
        // F/phi^2 = K G exactly; the F part has no boundary singularity.
        q += num * num * Khat * gaussian(eq.profile.domain.dim, y) * g.grid.qw[i];
        const double ph = eq.profile.phi(x);
        if (ph > 1e-12 * (1.0 + std::abs(x)))
            q += (num / ph) * (num / ph) * nm.g[i] * g.grid.qw[i];
    }
    return q * nm.scale;
}

EntropyTrace entropy_trace(const std::vector<RadialField>& gs,
                           const std::vector<TransientEquilibrium>& eqs) {
    if (gs.size() != eqs.size())
        throw std::invalid_argument("entropy_trace: one equilibrium per field required");
    const int n = static_cast<int>(gs.size());
    EntropyTrace trace;
    trace.rows.resize(n);
    for (int i = 0; i < n; ++i) {
        EntropyRow& row = trace.rows[i];
        row.tau = gs[i].time;
        if (i > 0 && !(row.tau > trace.rows[i - 1].tau))
            throw std::invalid_argument("entropy_trace: tau values must be increasing");
        row.H = rel_entropy(gs[i], eqs[i]);
        row.fisher = fisher_information(gs[i], eqs[i]);
        row.R = remainder_R(gs[i], eqs[i]);
        const double l1 = l1_distance(gs[i], eqs[i]);
        row.ck_gap = 2.0 * row.H - l1 * l1;
        row.balance = std::numeric_limits<double>::quiet_NaN();
    }
    for (int i = 1; i + 1 < n; ++i) {
        const double hm = trace.rows[i].tau - trace.rows[i - 1].tau;
        const double hp = trace.rows[i + 1].tau - trace.rows[i].tau;
        const double dH = (hm * hm * trace.rows[i + 1].H - hp * hp * trace.rows[i - 1].H +
                           (hp * hp - hm * hm) * trace.rows[i].H) /
                          (hm * hp * (hm + hp));
        trace.rows[i].balance = dH + trace.rows[i].fisher + trace.rows[i].R;
    }
    return trace;
}

void write_csv(const EntropyTrace& trace, std::ostream& out) {
    out << "tau,H,fisher,R,ck_gap,balance_residual\n";
    for (const auto& r : trace.rows) {
        out << fmt_double(r.tau) << ',' << fmt_double(r.H) << ',' << fmt_double(r.fisher) << ','
            << fmt_double(r.R) << ',' << fmt_double(r.ck_gap) << ',' << fmt_double(r.balance)
            << '\n';
    }
}

}  // namespace ehl
