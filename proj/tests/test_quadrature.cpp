#include <doctest.h>

#include <cmath>

#include "ehl/quadrature.hpp"

using namespace ehl;

TEST_CASE("polynomials are integrated to machine precision") {
    auto q = integrate_gk([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(std::abs(q.value - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) - 2.0) < 1e-13);
}

TEST_CASE("radial Gaussian mass is 1 in every dimension") {
    for (int d : {1, 2, 3, 5}) {
        auto f = [d](double r) {
            return std::exp(-0.5 * r * r) * std::pow(r, d - 1);
        };
        const double mass = integrate(f, 0.0, kGaussianTailCut, {1e-13, 1e-13, 4000}) *
                            unit_sphere_area(d) * std::pow(2.0 * M_PI, -0.5 * d);
        CHECK(std::abs(mass - 1.0) < 1e-12);
    }
}

TEST_CASE("panel seeds handle interior kinks") {
    auto f = [](double x) { return std::abs(x - 0.3); };
    auto q = integrate_panels(f, {0.0, 0.3, 1.0});
    const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
    CHECK(std::abs(q.value - exact) < 1e-14);
}

TEST_CASE("non-convergence reports the achieved tolerance") {
    QuadOptions opt;
    opt.abs_tol = 1e-16;
    opt.rel_tol = 1e-18;
    opt.max_intervals = 6;
    auto nasty = [](double x) { return std::sqrt(std::abs(std::sin(50.0 * x))); };
    CHECK_THROWS_AS((void)integrate(nasty, 0.0, 1.0, opt), QuadratureError);
}

TEST_CASE("unit sphere areas") {
    CHECK(unit_sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
}
