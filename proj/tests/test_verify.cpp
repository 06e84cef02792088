#include <doctest.h>

#include <cmath>

#include "ehl/evolve.hpp"
#include "ehl/kernels.hpp"
#include "ehl/normalization.hpp"
#include "ehl/verify.hpp"

using namespace ehl;

namespace {

const HarmonicProfile kHalf = make_profile(make_domain(DomainKind::half_line, 1, 0.0));

RadialField exact_profile_field(const HarmonicProfile& p, double t, double m_phi, double k_t) {
    RadialField f;
    f.domain = p.domain;
    const double lo = p.domain.boundary();
    f.grid = make_uniform_grid(p.domain.dim, lo, lo + kGaussianTailCut * std::sqrt(2.0 * t),
                               2001);
    f.time = t;
    f.u.resize(f.grid.size());
    for (int i = 0; i < f.grid.size(); ++i)
        f.u[i] = k_t * m_phi * p.phi(f.grid.r[i]) * heat_gamma(p.domain.dim, t, f.grid.r[i]);
    return f;
}

}  // namespace

TEST_CASE("error norms vanish on the exact asymptotic profile") {
    for (double t : {2.0, 10.0}) {
        const double kt = k_of_t(kHalf, t);
        RadialField f = exact_profile_field(kHalf, t, 1.7, kt);
        CHECK(error_norm(f, kHalf, 1.7, ErrorMode::weighted_l1, kt) == 0.0);
        CHECK(error_norm(f, kHalf, 1.7, ErrorMode::plain_l1, kt) == 0.0);
        CHECK(error_norm(f, kHalf, 1.7, ErrorMode::uniform_rel, kt) == 0.0);
    }
    RadialField f = exact_profile_field(kHalf, 1.0, 1.0, 1.0);
    CHECK_THROWS_AS((void)error_norm(f, kHalf, 1.0, ErrorMode::plain_l1, 1.0),
                    std::invalid_argument);
}

TEST_CASE("kernel error against the Taylor comparator") {
    // boundary zero
    auto ke = kernel_error_1d(4.0, 2.0, 1e-12, 0.0);
    CHECK(ke.error <= 1e-12);
    CHECK(ke.comparator <= 1e-11);

    // error * t^2 bounded as t grows at fixed x, y: the remainder of
    // 1 - e^{-z} - z at z = xy/t is z^2/2 (1 + O(z)).
    const double x = 1.0, y = 2.0;
    double prev = 1e300;
    for (double t : {4.0, 16.0, 64.0, 256.0, 1024.0}) {
        const double scaled = kernel_error_1d(t, x, y, 0.0).error * t * t;
        const double taylor = heat_gamma(1, t, x - y) * x * x * y * y / 2.0;
        CHECK(scaled == doctest::Approx(taylor).epsilon(std::min(0.5, 2.0 * x * y / t)));
        CHECK(scaled <= prev * 1.5);
        prev = scaled;
    }

    // ratio error/comparator bounded over a lattice
    double worst = 0.0;
    for (double t : {4.0, 16.0, 64.0})
        for (double xx : {0.5, 1.0, 2.0})
            for (double yy : {0.5, 2.0, 4.0}) {
                auto k = kernel_error_1d(t, xx, yy, 0.0);
                worst = std::max(worst, k.error / k.comparator);
            }
    CHECK(worst < 1.0);
}

TEST_CASE("fit_rate on exact, constant, and noisy series") {
    RateSeries exact{"exact", {}, {}};
    for (double t = 10.0; t <= 1e4 * 1.01; t *= std::sqrt(10.0)) {
        exact.t.push_back(t);
        exact.value.push_back(3.0 * std::pow(t, -0.5));
    }
    // a window holding fewer than 5 points is rejected
    CHECK_THROWS_AS((void)fit_rate(exact, 10.0, 50.0), std::invalid_argument);
    RateFit fit = fit_rate(exact, 10.0, 1e4);
    CHECK(std::abs(fit.alpha + 0.5) < 1e-12);
    CHECK(fit.prefactor == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(fit.max_log_residual < 1e-12);

    RateSeries flat{"flat", {1, 2, 4, 8, 16, 32}, {2, 2, 2, 2, 2, 2}};
    CHECK(std::abs(fit_rate(flat, 1.0, 32.0).alpha) < 1e-14);

    // 1% multiplicative noise around t^{-1}, deterministic LCG
    RateSeries noisy{"noisy", {}, {}};
    unsigned long long state = 12345;
    for (double t = 10.0; t <= 1.1e4; t *= 1.5) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double r = static_cast<double>(state >> 11) / 9007199254740992.0;  // [0,1)
        noisy.t.push_back(t);
        noisy.value.push_back(std::pow(t, -1.0) * (1.0 + 0.01 * (2.0 * r - 1.0)));
    }
    RateFit nf = fit_rate(noisy, 10.0, 1.1e4);
    CHECK(std::abs(nf.alpha + 1.0) < 0.03);

    RateSeries bad{"bad", {1, 2, 3, 4, 5, 6}, {1, 1, 0.0, 1, 1, 1}};
    CHECK_THROWS_AS((void)fit_rate(bad, 1.0, 6.0), std::invalid_argument);
}

TEST_CASE("mass expansion constants in d = 3") {
    // Gaussian negative moment: int G |y|^{-1} = sqrt(2/pi).
    CHECK(gaussian_negative_moment(3) == doctest::Approx(0.7978845608028654).epsilon(1e-10));
    // True expansion coefficient carries the 2^{1-d/2} Jacobian: 1/sqrt(pi).
    const HarmonicProfile p = make_profile(make_domain(DomainKind::ball_complement, 3, 1.0));
    CHECK(mass_expansion_constant(p) == doctest::Approx(0.5641895835477563).epsilon(1e-10));
    // d = 4, R = 2: C* = 4, int G |y|^{-2} = 1/2, Jacobian 2^{-1}.
    const HarmonicProfile p42 = make_profile(make_domain(DomainKind::ball_complement, 4, 2.0));
    CHECK(mass_expansion_constant(p42) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("d=3 mass residual decays past the leading expansion term") {
    const ExteriorDomain dom = make_domain(DomainKind::ball_complement, 3, 1.0);
    const HarmonicProfile p = make_profile(dom);
    const InitialDatum u0 = InitialDatum::make_gaussian_shell(3.0, 0.5, 1.0);
    RadialGrid grid = make_fv_grid(3, 1.0, default_r_max(dom, u0, 50.0), 1200,
                                   GridRule::graded_toward_boundary);
    std::vector<double> times;
    for (double t = 2.0; t <= 50.0; t *= 1.3) times.push_back(t);
    auto fields = solve_radial_fd(dom, u0, times, grid, 0.02);
    const double m_phi = harmonic_mass(fields.front());

    RateSeries mass{"mass", {}, {}};
    for (const auto& f : fields) {
        mass.t.push_back(f.time);
        mass.value.push_back(field_integral(f));
    }
    RateSeries resid = mass_asymptote_residual(mass, p, m_phi);
    // the remainder should beat t^{-1/2 - lambda/6}; scale it up and watch for growth
    const double lambda_hat3 = 1.64;
    double lo = 0.0, hi = 0.0;
    const double mid = 0.5 * (std::log(resid.t.front()) + std::log(resid.t.back()));
    for (size_t i = 0; i < resid.t.size(); ++i) {
        const double scaled =
            resid.value[i] * std::pow(resid.t[i], 0.5 * (3 - 2) + lambda_hat3 / (2.0 * 3));
        (std::log(resid.t[i]) <= mid ? lo : hi) = std::max(std::log(resid.t[i]) <= mid ? lo : hi,
                                                           scaled);
    }
    CHECK(hi <= lo * 1.05);
}

TEST_CASE("d=1 mass residual from the erf law stays bounded") {
    const double y = 2.0;
    RateSeries mass{"mass", {}, {}};
    for (double t = 10.0; t <= 1e4 * 1.01; t *= 2.0) {
        mass.t.push_back(t);
        mass.value.push_back(std::erf(y / (2.0 * std::sqrt(t))));
    }
    RateSeries resid = mass_asymptote_residual(mass, kHalf, y);
    for (size_t i = 1; i < resid.value.size(); ++i)
        CHECK(resid.value[i] <= resid.value.front() * 1.01);
}

TEST_CASE("split_bound fits on the first half and validates on the second") {
    std::vector<double> t, e, shape;
    for (double tt = 10.0; tt <= 1e4; tt *= 2.0) {
        t.push_back(tt);
        e.push_back(2.0 * std::pow(tt, -1.0));       // decays faster than the shape
        shape.push_back(std::pow(tt, -0.5));
    }
    SplitBoundCheck ok = split_bound(t, e, shape);
    CHECK(ok.pass);
    CHECK(ok.c_fit > 0.0);

    std::vector<double> grow = e;
    for (size_t i = 0; i < grow.size(); ++i) grow[i] = std::pow(t[i], -0.25);  // slower decay
    SplitBoundCheck bad = split_bound(t, grow, shape);
    CHECK(!bad.pass);
}
