#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ehl/kernels.hpp"
#include "ehl/normalization.hpp"

using namespace ehl;

namespace {

const HarmonicProfile kHalf = make_profile(make_domain(DomainKind::half_line, 1, 0.0));
const HarmonicProfile kBall3 = make_profile(make_domain(DomainKind::ball_complement, 3, 1.0));
const HarmonicProfile kBall2 = make_profile(make_domain(DomainKind::ball_complement, 2, 1.0));

// Brute-force composite-Simpson value of the d=3, R=1, tau=0 integral,
// independent of the adaptive quadrature path.
double i0_d3_bruteforce() {
    const int n = 400001;
    const double lo = 1.0, hi = 16.0, h = (hi - lo) / (n - 1);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = lo + i * h;
        const double ph = 1.0 - 1.0 / r;
        const double f = ph * ph * std::exp(-0.5 * r * r) * r * r;
        const double c = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += c * f;
    }
    return acc * h / 3.0 * 4.0 * M_PI * std::pow(2.0 * M_PI, -1.5);
}

}  // namespace

TEST_CASE("half-line normalization is exact") {
    CHECK(i_tau(kHalf, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    for (double tau : {0.0, 0.5, 1.0, 3.0, 7.0, 10.0}) {
        CHECK(i_tau(kHalf, tau) ==
              doctest::Approx(0.5 * std::exp(2.0 * tau)).epsilon(1e-11));
    }
    for (double t : {0.5, 1.0, 7.0, 100.0, 1e4}) {
        CHECK(k_of_t(kHalf, t) == doctest::Approx(1.0 / t).epsilon(1e-10));
    }
    CHECK_THROWS_AS((void)k_of_t(kHalf, 0.4), std::invalid_argument);
}

TEST_CASE("d=3 value against a brute-force oracle") {
    const double frozen = 0.15067956668754151;  // high-precision quadrature, tol 1e-12
    CHECK(i_tau(kBall3, 0.0) == doctest::Approx(frozen).epsilon(1e-10));
    CHECK(i0_d3_bruteforce() == doctest::Approx(frozen).epsilon(1e-9));
}

TEST_CASE("k_t limits") {
    // d >= 3: k_t -> 1.
    CHECK(std::abs(k_of_t(kBall3, 1e4) - 1.0) < 0.02);
    CHECK(std::abs(k_of_t(kBall3, 1e6) - 1.0) < 2e-3);
    // d = 2: k_t (log t)^2 / 4 -> 1, at the glacial O(1/log t) pace.
    const double t = std::exp(40.0);
    CHECK(k_of_t(kBall2, t) * std::pow(std::log(t), 2) / 4.0 ==
          doctest::Approx(1.0).epsilon(0.05));
    const double t2 = std::exp(80.0);
    const double dev1 = std::abs(k_of_t(kBall2, t) * std::pow(std::log(t), 2) / 4.0 - 1.0);
    const double dev2 = std::abs(k_of_t(kBall2, t2) * std::pow(std::log(t2), 2) / 4.0 - 1.0);
    CHECK(dev2 < dev1);
}

TEST_CASE("i_tau_prime matches finite differences") {
    const double dtau = 1e-4;
    for (const HarmonicProfile* p : {&kHalf, &kBall2, &kBall3}) {
        for (double tau : {0.3, 1.0, 2.0, 3.0}) {
            const double fd = (i_tau(*p, tau + dtau) - i_tau(*p, tau - dtau)) / (2.0 * dtau);
            CHECK(i_tau_prime(*p, tau) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    // d = 1: I' = e^{2 tau} exactly.
    for (double tau : {0.0, 1.0, 2.0}) {
        CHECK(i_tau_prime(kHalf, tau) ==
              doctest::Approx(std::exp(2.0 * tau)).epsilon(1e-10));
    }
}

TEST_CASE("K'/K ratios") {
    for (double tau : {0.0, 0.7, 2.0, 5.0})
        CHECK(kprime_over_k(kHalf, tau) == doctest::Approx(2.0).epsilon(1e-10));

    // d = 2: (1 + tau) |K'|/K stays bounded (no growth across the range).
    double lo_max = 0.0, hi_max = 0.0;
    for (double tau = 0.0; tau <= 20.0; tau += 1.0) {
        const double v = (1.0 + tau) * kprime_over_k(kBall2, tau);
        (tau <= 10.0 ? lo_max : hi_max) = std::max(tau <= 10.0 ? lo_max : hi_max, v);
    }
    CHECK(hi_max <= lo_max * 1.05);

    // d = 3: e^{(d-2) tau} |K'|/K bounded.
    double lo3 = 0.0, hi3 = 0.0;
    for (double tau = 0.0; tau <= 12.0; tau += 0.5) {
        const double v = std::exp(tau) * kprime_over_k(kBall3, tau);
        (tau <= 6.0 ? lo3 : hi3) = std::max(tau <= 6.0 ? lo3 : hi3, v);
    }
    CHECK(hi3 <= lo3 * 1.05);
}

TEST_CASE("asymptote residuals") {
    for (double tau : {0.5, 2.0, 6.0, 10.0})
        CHECK(asymptote_residual(kHalf, tau) <= 1e-10);

    double first = 0.0, second = 0.0;
    for (double tau = 5.0; tau <= 50.0; tau += 2.5) {
        const double v = asymptote_residual(kBall2, tau);
        (tau <= 25.0 ? first : second) = std::max(tau <= 25.0 ? first : second, v);
    }
    CHECK(second <= first * 1.05);

    double lo3 = 0.0, hi3 = 0.0;
    for (double tau = 2.0; tau <= 15.0; tau += 1.0) {
        const double v = asymptote_residual(kBall3, tau);
        (tau <= 8.0 ? lo3 : hi3) = std::max(tau <= 8.0 ? lo3 : hi3, v);
    }
    CHECK(hi3 <= lo3 * 1.05);
}

TEST_CASE("table rows and CSV") {
    NormalizationTable t = make_normalization_table(kBall3, {0.0, 1.0, 2.0});
    REQUIRE(t.rows.size() == 3);
    for (const auto& r : t.rows) {
        CHECK(std::abs(r.K * r.I - 1.0) <= 4e-16);
        CHECK(r.I > 0.0);
        CHECK(r.I <= 1.0);  // d >= 3: phi <= 1
    }
    std::ostringstream csv;
    write_csv(t, csv);
    CHECK(csv.str().substr(0, 21) == "tau,I,K,Iprime,err\n0,");
}

TEST_CASE("d=2 distance to tau^2 grows at most linearly") {
    // |tau^2 - I_tau| <= C tau with C fitted on [5, 25], checked on (25, 50].
    double c_fit = 0.0, worst = 0.0;
    for (double tau = 5.0; tau <= 50.0; tau += 2.5) {
        const double v = std::abs(tau * tau - i_tau(kBall2, tau)) / tau;
        if (tau <= 25.0)
            c_fit = std::max(c_fit, v);
        else
            worst = std::max(worst, v);
    }
    CHECK(worst <= c_fit);
}
