#include "ehl/normalization.hpp"

#include <cmath>
#include <ostream>

#include "ehl/io.hpp"
#include "ehl/kernels.hpp"
#include "ehl/parallel.hpp"

namespace ehl {

namespace {

// Panel boundaries for the radial integral over (lo, cut): log-spaced near the
// shrinking inner boundary, where the integrand has the phi^2 zero.
std::vector<double> radial_breaks(double lo, double cut) {
    std::vector<double> b{lo};
    if (lo > 0.0) {
        for (double r = 4.0 * lo; r < std::min(1.0, cut); r *= 4.0) b.push_back(r);
    }
    for (double r : {1.0, 2.0, 4.0, 8.0}) {
        if (r > lo && r < cut) b.push_back(r);
    }
    b.push_back(cut);
    return b;
}

struct RadialSetup {
    double lo;            // inner integration limit in the y variable
    double cut;           // Gaussian tail cutoff
    double measure;       // angular measure folded into the 1-D integral
};

RadialSetup setup_for(const HarmonicProfile& p, double tau) {
    RadialSetup s;
    const double b = p.domain.boundary() * std::exp(-tau);
    s.lo = b;
    s.cut = std::max(kGaussianTailCut, b + kGaussianTailCut);
    s.measure = p.domain.kind == DomainKind::half_line
                    ? 1.0
                    : unit_sphere_area(p.domain.dim);
    return s;
}

}  // namespace

double i_tau(const HarmonicProfile& p, double tau, double* err_estimate) {
    if (tau < 0.0) throw std::invalid_argument("i_tau requires tau >= 0");
    if (err_estimate) *err_estimate = 0.0;
    if (p.domain.kind == DomainKind::full_space) return 1.0;  // phi == 1, G integrates to 1

    const RadialSetup s = setup_for(p, tau);
    const double e_tau = std::exp(tau);
    const int d = p.domain.dim;
    auto f = [&](double r) {
        const double ph = p.phi(e_tau * r);
        const double radial = d == 1 ? 1.0 : std::pow(r, d - 1);
        return ph * ph * gaussian(d, r) * radial;
    };
    QuadResult q = integrate_panels(f, radial_breaks(s.lo, s.cut), {1e-12, 1e-13, 8000});
    if (err_estimate) *err_estimate = q.error * s.measure;
    return q.value * s.measure;
}

double k_of_t(const HarmonicProfile& p, double t) {
    if (t < 0.5) throw std::invalid_argument("k_of_t requires t >= 1/2");
    return 1.0 / i_tau(p, 0.5 * std::log(2.0 * t));
}

double i_tau_prime(const HarmonicProfile& p, double tau) {
    if (tau < 0.0) throw std::invalid_argument("i_tau_prime requires tau >= 0");
    if (p.domain.kind == DomainKind::full_space) return 0.0;

    const RadialSetup s = setup_for(p, tau);
    const double e_tau = std::exp(tau);
    const int d = p.domain.dim;
    auto f = [&](double r) {
        const double x = e_tau * r;
        const double radial = d == 1 ? 1.0 : std::pow(r, d - 1);
        return 2.0 * e_tau * p.phi(x) * p.grad(x) * r * gaussian(d, r) * radial;
    };
    QuadResult q = integrate_panels(f, radial_breaks(s.lo, s.cut), {1e-12, 1e-13, 8000});
    return q.value * s.measure;
}

double kprime_over_k(const HarmonicProfile& p, double tau) {
    return std::abs(i_tau_prime(p, tau)) / i_tau(p, tau);
}

double asymptote_residual(const HarmonicProfile& p, double tau) {
    if (p.domain.kind == DomainKind::full_space) return 0.0;
    const double K = 1.0 / i_tau(p, tau);
    const int d = p.domain.dim;
    if (d == 1) return std::abs(K - 2.0 * std::exp(-2.0 * tau));
    if (d == 2) return tau * tau * tau * std::abs(K - 1.0 / (tau * tau));
    return std::exp((d - 2) * tau) * std::abs(K - 1.0);
}

NormalizationTable make_normalization_table(const HarmonicProfile& p,
                                            const std::vector<double>& taus) {
    NormalizationTable t{p, {}};
    t.rows.resize(taus.size());
    parallel_for(static_cast<int>(taus.size()), [&](int i) {
        NormalizationRow row;
        row.tau = taus[i];
        row.I = i_tau(p, row.tau, &row.err);
        row.K = 1.0 / row.I;
        row.Iprime = i_tau_prime(p, row.tau);
        t.rows[i] = row;
    });
    return t;
}

void write_csv(const NormalizationTable& table, std::ostream& out) {
    out << "tau,I,K,Iprime,err\n";
    for (const auto& r : table.rows) {
        out << fmt_double(r.tau) << ',' << fmt_double(r.I) << ',' << fmt_double(r.K) << ','
            << fmt_double(r.Iprime) << ',' << fmt_double(r.err) << '\n';
    }
}

}  // namespace ehl
