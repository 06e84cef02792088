#include "ehl/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ehl/io.hpp"
#include "ehl/quadrature.hpp"

namespace ehl {

double RadialGrid::spacing_min() const {
    double h = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < r.size(); ++i) h = std::min(h, r[i + 1] - r[i]);
    return h;
}

namespace {

void check_grid_args(double lo, double hi, int n) {
    if (!(hi > lo)) throw std::invalid_argument("grid requires hi > lo");
    if (n < 16) throw std::invalid_argument("grid requires n >= 16");
}

std::vector<double> fv_weights(int d, const std::vector<double>& r, double lo, double hi) {
    const int n = static_cast<int>(r.size());
    std::vector<double> qw(n);
    auto cell = [&](double a, double b) {
        return (std::pow(b, d) - std::pow(a, d)) / d;
    };
    for (int i = 0; i < n; ++i) {
        const double a = i == 0 ? lo : 0.5 * (r[i - 1] + r[i]);
        const double b = i == n - 1 ? hi : 0.5 * (r[i] + r[i + 1]);
        qw[i] = cell(a, b);
    }
    return qw;
}

}  // namespace

RadialGrid make_uniform_grid(int d, double lo, double hi, int n) {
    check_grid_args(lo, hi, n);
    if (n % 2 == 0) ++n;  // composite Simpson wants an odd node count
    RadialGrid g;
    g.rule = GridRule::uniform;
    g.r.resize(n);
    g.qw.resize(n);
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) g.r[i] = lo + i * h;
    g.r.back() = hi;
    for (int i = 0; i < n; ++i) {
        double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        g.qw[i] = c * h / 3.0 * std::pow(std::abs(g.r[i]), d - 1);
    }
    return g;
}

RadialGrid make_fv_grid(int d, double lo, double hi, int n, GridRule rule) {
    check_grid_args(lo, hi, n);
    RadialGrid g;
    g.rule = rule;
    const double L = hi - lo;
    if (rule == GridRule::uniform || L <= 1.0) {
        g.r.resize(n);
        const double h = L / (n - 1);
        for (int i = 0; i < n; ++i) g.r[i] = lo + i * h;
        g.r.back() = hi;
    } else {
        // Node density doubled within distance 1 of the hole boundary.
        const double L1 = 1.0, L2 = L - 1.0;
        const double f = (L1 + 0.5 * L2) / (n - 1);  // fine spacing
        int n1 = std::max(2, static_cast<int>(std::lround(L1 / f)));
        int n2 = n - 1 - n1;
        if (n2 < 2) { n2 = 2; n1 = n - 3; }
        g.r.reserve(n);
        for (int i = 0; i <= n1; ++i) g.r.push_back(lo + L1 * i / n1);
        for (int i = 1; i <= n2; ++i) g.r.push_back(lo + L1 + L2 * i / n2);
        g.r.back() = hi;
    }
    g.qw = fv_weights(d, g.r, lo, hi);
    return g;
}

double angular_measure(const ExteriorDomain& dom) {
    return dom.kind == DomainKind::half_line ? 1.0 : unit_sphere_area(dom.dim);
}

double moment(const RadialField& f, int k, MomentWeight w) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    const double scale = angular_measure(f.domain);
    HarmonicProfile prof = make_profile(f.domain);
    double sum = 0.0;
    for (int i = 0; i < f.grid.size(); ++i) {
        double val = f.u[i] * f.grid.qw[i];
        if (k > 0) val *= std::pow(std::abs(f.grid.r[i]), k);
        if (w == MomentWeight::phi) val *= prof.phi(f.grid.r[i]);
        sum += val;
    }
    return sum * scale;
}

double field_integral(const RadialField& f) { return moment(f, 0, MomentWeight::one); }
double harmonic_mass(const RadialField& f) { return moment(f, 0, MomentWeight::phi); }

InitialDatum InitialDatum::make_gaussian_shell(double center, double width, double mass) {
    if (!(width > 0.0) || !(mass > 0.0))
        throw std::invalid_argument("gaussian_shell requires width > 0 and mass > 0");
    InitialDatum d;
    d.kind = Kind::gaussian_shell;
    d.center = center;
    d.width = width;
    d.mass = mass;
    return d;
}

InitialDatum InitialDatum::make_annulus(double r1, double r2, double height) {
    if (!(r2 > r1) || !(height > 0.0))
        throw std::invalid_argument("annulus requires r2 > r1 and height > 0");
    InitialDatum d;
    d.kind = Kind::annulus;
    d.r1 = r1;
    d.r2 = r2;
    d.height = height;
    return d;
}

InitialDatum InitialDatum::make_point_approx(double location, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("point_approx requires eps > 0");
    InitialDatum d;
    d.kind = Kind::point_approx;
    d.location = location;
    d.eps = eps;
    d.mass = 1.0;
    return d;
}

double InitialDatum::support_lo() const {
    switch (kind) {
        case Kind::gaussian_shell: return center - kGaussianTailCut * width;
        case Kind::annulus: return r1;
        case Kind::point_approx: return location - kGaussianTailCut * eps;
    }
    return 0.0;
}

double InitialDatum::support_hi() const {
    switch (kind) {
        case Kind::gaussian_shell: return center + kGaussianTailCut * width;
        case Kind::annulus: return r2;
        case Kind::point_approx: return location + kGaussianTailCut * eps;
    }
    return 0.0;
}

namespace {

double gaussian_bump(double r, double c, double s) {
    const double z = (r - c) / s;
    return std::exp(-0.5 * z * z);
}

// Amplitude that makes the domain integral of the bump equal to `mass`.
double bump_amplitude(const ExteriorDomain& dom, double c, double s, double mass) {
    const double lo = std::max(dom.boundary(), c - kGaussianTailCut * s);
    const double hi = c + kGaussianTailCut * s;
    const int d = dom.dim;
    auto f = [&](double r) { return gaussian_bump(r, c, s) * std::pow(std::abs(r), d - 1); };
    const double raw = integrate(f, lo, hi, {1e-14, 1e-12, 4000}) * angular_measure(dom);
    if (!(raw > 0.0)) throw std::invalid_argument("initial datum has no mass inside the domain");
    return mass / raw;
}

}  // namespace

std::function<double(double)> datum_evaluator(const InitialDatum& u0, const ExteriorDomain& dom) {
    switch (u0.kind) {
        case InitialDatum::Kind::gaussian_shell: {
            const double amp = bump_amplitude(dom, u0.center, u0.width, u0.mass);
            const double c = u0.center, s = u0.width;
            return [amp, c, s](double r) { return amp * gaussian_bump(r, c, s); };
        }
        case InitialDatum::Kind::point_approx: {
            const double amp = bump_amplitude(dom, u0.location, u0.eps, u0.mass);
            const double c = u0.location, s = u0.eps;
            return [amp, c, s](double r) { return amp * gaussian_bump(r, c, s); };
        }
        case InitialDatum::Kind::annulus: {
            const double b = dom.boundary();
            if (u0.r1 < b - 1e-9 * (1.0 + std::abs(b)))
                throw std::invalid_argument("annulus support reaches inside the hole");
            const double r1 = u0.r1, r2 = u0.r2, h = u0.height;
            return [r1, r2, h](double r) { return (r >= r1 && r <= r2) ? h : 0.0; };
        }
    }
    throw std::invalid_argument("unknown initial datum kind");
}

double datum_value(const InitialDatum& u0, const ExteriorDomain& dom, double r) {
    return datum_evaluator(u0, dom)(r);
}

std::vector<double> sample_datum(const InitialDatum& u0, const ExteriorDomain& dom,
                                 const RadialGrid& grid) {
    auto eval = datum_evaluator(u0, dom);
    std::vector<double> out(grid.r.size());
    for (size_t i = 0; i < grid.r.size(); ++i) out[i] = eval(grid.r[i]);
    return out;
}

void write_field_csv(const RadialField& f, std::ostream& out) {
    out << "# t = " << fmt_double(f.time) << '\n';
    out << "# d = " << f.domain.dim << '\n';
    out << "# domain = " << to_string(f.domain.kind) << '\n';
    out << "r,u\n";
    for (int i = 0; i < f.grid.size(); ++i)
        out << fmt_double(f.grid.r[i]) << ',' << fmt_double(f.u[i]) << '\n';
}

}  // namespace ehl
