#include "ehl/lsi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ehl/io.hpp"
#include "ehl/kernels.hpp"
#include "ehl/parallel.hpp"

namespace ehl {

namespace {

double quad_moment(const RadialDensity1D& d, int k) {
    auto f = [&](double r) { return std::pow(r, k) * d.f(r); };
    return integrate(f, std::max(d.a, d.lo - 1e-3), d.hi, {1e-13, 1e-11, 4000});
}

}  // namespace

double RadialDensity1D::m1() const { return quad_moment(*this, 1); }
double RadialDensity1D::m2() const { return quad_moment(*this, 2); }

RadialDensity1D reduced_density(const TransientEquilibrium& eq) {
    const int d = eq.profile.domain.dim;
    if (d < 2) throw std::invalid_argument("reduced_density applies in d >= 2");
    RadialDensity1D out;
    out.a = eq.boundary();
    out.lo = out.a + 1e-3;
    out.hi = out.a + kGaussianTailCut;
    out.assembly_dim = d;
    const HarmonicProfile p = eq.profile;
    const double K = eq.K;
    const double e_tau = std::exp(eq.tau);
    out.f = [p, K, e_tau, d](double r) {
        const double ph = p.phi(std::max(e_tau * r, p.domain.boundary()));
        return K * std::pow(r, d - 1) * ph * ph * gaussian(d, r);
    };
    // Phi = r^2/2 - 2 log phi(e^tau r) - (d-1) log r + const
    out.potential_dd = [p, e_tau, d](double r) {
        const double x = e_tau * r;
        const double ph = p.phi(x);
        const double dph = e_tau * p.grad(x);
        const double ddph = e_tau * e_tau * p.second(x);
        if (ph <= 0.0) return std::numeric_limits<double>::infinity();
        return 1.0 + 2.0 * (dph * dph - ph * ddph) / (ph * ph) + (d - 1) / (r * r);
    };
    return out;
}

RadialDensity1D halfline_equilibrium_density() {
    RadialDensity1D out;
    out.a = 0.0;
    out.lo = 1e-3;
    out.hi = kGaussianTailCut;
    out.assembly_dim = 1;
    out.f = [](double y) { return std::sqrt(2.0 / M_PI) * y * y * std::exp(-0.5 * y * y); };
    out.potential_dd = [](double y) { return 1.0 + 2.0 / (y * y); };
    return out;
}

RadialDensity1D gaussian_line_density() {
    RadialDensity1D out;
    out.a = -std::numeric_limits<double>::infinity();
    out.lo = -kGaussianTailCut;
    out.hi = kGaussianTailCut;
    out.assembly_dim = 1;
    out.f = [](double y) { return gaussian(1, y); };
    out.potential_dd = [](double) { return 1.0; };
    return out;
}

double potential_phi(const RadialDensity1D& d, double r) {
    if (r <= d.a) throw std::domain_error("potential_phi: point at or left of the endpoint");
    const double v = d.f(r);
    if (!(v > 0.0)) throw std::domain_error("potential_phi: density vanished");
    return -std::log(v);
}

double potential_dd_numeric(const RadialDensity1D& d, double r) {
    const double span = std::isfinite(d.a) ? std::max(r - d.a, 0.05) : 1.0 + std::abs(r);
    const double h = 1e-3 * span;
    const double pm = potential_phi(d, r - h);
    const double p0 = potential_phi(d, r);
    const double pp = potential_phi(d, r + h);
    return (pp - 2.0 * p0 + pm) / (h * h);
}

double phi_dd_min(const RadialDensity1D& d, int n) {
    double best = d.tail_dd_is_one ? 1.0 : std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double r = d.lo + (d.hi - d.lo) * i / n;
        const double v = d.potential_dd ? d.potential_dd(r) : potential_dd_numeric(d, r);
        best = std::min(best, v);
    }
    return best;
}

double bakry_emery_lambda(const RadialDensity1D& d) {
    const double m = phi_dd_min(d);
    return m > 0.0 ? 2.0 * m : 0.0;
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below x.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        double denom = q;
        if (denom == 0.0) denom = 1e-300;
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

double poincare_1d(const RadialDensity1D& d, int n) {
    if (n < 16) throw std::invalid_argument("poincare_1d requires n >= 16");
    const double lo = d.lo, hi = d.hi;
    const double h = (hi - lo) / (n - 1);
    std::vector<double> fmid(n - 1), fnode(n);
    for (int i = 0; i < n; ++i) fnode[i] = std::max(d.f(lo + i * h), 1e-300);
    for (int i = 0; i + 1 < n; ++i) fmid[i] = std::max(d.f(lo + (i + 0.5) * h), 1e-300);

    // A v = lambda M v with A the conservative stiffness matrix and M lumped.
    // Similarity by M^{-1/2} gives a symmetric tridiagonal problem whose
    // kernel is the constant mode; the reported gap is the second eigenvalue.
    std::vector<double> diag(n), off(n - 1);
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? fmid[i - 1] : 0.0;
        const double right = i + 1 < n ? fmid[i] : 0.0;
        diag[i] = (left + right) / (h * h * fnode[i]);
    }
    for (int i = 0; i + 1 < n; ++i)
        off[i] = -fmid[i] / (h * h * std::sqrt(fnode[i] * fnode[i + 1]));

    double upper = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        upper = std::max(upper, diag[i] + radius);
    }
    double a = 0.0, b = upper;
    const int want = 2;  // strictly above the constant mode
    for (int iter = 0; iter < 200 && (b - a) > 1e-12 * (1.0 + b); ++iter) {
        const double mid = 0.5 * (a + b);
        if (sturm_count(diag, off, mid) >= want)
            b = mid;
        else
            a = mid;
    }
    if (!((b - a) <= 1e-10 * (1.0 + b)))
        throw std::runtime_error("poincare_1d: bisection failed to converge");
    return 0.5 * (a + b);
}

double radial_lsi_bound(double lambda_l, double lambda_p, double m1, double m2, int d,
                        double c_assembly) {
    if (!(lambda_l > 0.0) || !(lambda_p > 0.0) || !(m1 > 0.0) || !(m2 > 0.0))
        throw std::invalid_argument("radial_lsi_bound requires positive inputs");
    if (d < 2) throw std::invalid_argument("radial_lsi_bound applies in d >= 2");
    if (!(c_assembly > 0.0)) throw std::invalid_argument("c_assembly must be positive");
    const double inner = std::max(1.0 / lambda_p, m2 / (d - 1));
    return c_assembly / (1.0 / lambda_l + m1 * std::sqrt(inner));
}

double lambda_hat(const HarmonicProfile& p, double tau, double c_assembly, int poincare_n) {
    if (p.domain.dim == 1) return 2.0;
    TransientEquilibrium eq = make_equilibrium(p, tau);
    RadialDensity1D den = reduced_density(eq);
    const double be = bakry_emery_lambda(den);
    const double lp = poincare_1d(den, poincare_n);
    return radial_lsi_bound(be, lp, den.m1(), den.m2(), p.domain.dim, c_assembly);
}

std::vector<LsiRow> lsi_report(const HarmonicProfile& p, const std::vector<double>& taus,
                               double c_assembly, int poincare_n) {
    std::vector<LsiRow> rows(taus.size());
    parallel_for(static_cast<int>(taus.size()), [&](int i) {
        LsiRow row;
        row.tau = taus[i];
        if (p.domain.dim == 1) {
            RadialDensity1D den = halfline_equilibrium_density();
            row.phidd_min = phi_dd_min(den);
            row.be_lambda = bakry_emery_lambda(den);
            row.poincare = poincare_1d(den, poincare_n);
            row.assembled = 2.0;  // Bakry-Emery applies directly on the half-line
        } else {
            TransientEquilibrium eq = make_equilibrium(p, row.tau);
            RadialDensity1D den = reduced_density(eq);
            row.phidd_min = phi_dd_min(den);
            row.be_lambda = bakry_emery_lambda(den);
            row.poincare = poincare_1d(den, poincare_n);
            row.assembled = radial_lsi_bound(row.be_lambda, row.poincare, den.m1(), den.m2(),
                                             p.domain.dim, c_assembly);
        }
        rows[i] = row;
    });
    return rows;
}

void write_csv(const std::vector<LsiRow>& rows, std::ostream& out) {
    out << "tau,phidd_min,be_lambda,poincare,assembled_bound\n";
    for (const auto& r : rows) {
        out << fmt_double(r.tau) << ',' << fmt_double(r.phidd_min) << ','
            << fmt_double(r.be_lambda) << ',' << fmt_double(r.poincare) << ','
            << fmt_double(r.assembled) << '\n';
    }
}

}  // namespace ehl
