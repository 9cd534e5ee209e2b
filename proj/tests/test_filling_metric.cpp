#include "fillcert/filling_metric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"

using namespace fillcert;

namespace {
constexpr double kFourPi = 2.0 * kTwoPi;
}

TEST_CASE("t_lim at reference lengths") {
    CHECK(compute_t_lim(kFourPi) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(compute_t_lim(2.0 * kFourPi) == doctest::Approx(0.9375).epsilon(1e-15));
    // t_lim tends to 0 as the length comes down to 2*pi and to 1 for long slopes.
    CHECK(compute_t_lim(kTwoPi * 1.0000001) < 1e-5);
    CHECK(compute_t_lim(1e6) > 0.9999);
}

TEST_CASE("t_lim rejects lengths at or below 2*pi") {
    CHECK_THROWS_WITH_AS(compute_t_lim(kTwoPi), "metric undefined: slope too short",
                         std::domain_error);
    CHECK_THROWS_AS(compute_t_lim(5.0), std::domain_error);
    CHECK_THROWS_AS(compute_t_lim(-1.0), std::domain_error);
    CHECK_THROWS_AS(compute_t_lim(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("r0 at t_lim = 3/4 and domain checks") {
    // -atanh(sqrt(3)/2) / (sqrt(3)/2), high-precision reference value.
    CHECK(compute_r0(0.75) == doctest::Approx(-1.5206919926018927).epsilon(1e-14));
    CHECK(compute_r0(0.75) < 0.0);
    CHECK_THROWS_AS(compute_r0(0.0), std::domain_error);
    CHECK_THROWS_AS(compute_r0(1.0), std::domain_error);
    CHECK_THROWS_AS(compute_r0(-0.5), std::domain_error);
}

TEST_CASE("profile endpoints: zero at the core, meridian length at the boundary") {
    for (double ell : {6.3, kFourPi, 40.0, 1000.0}) {
        const double r0 = compute_r0(compute_t_lim(ell));
        CAPTURE(ell);
        CHECK(profile_f(ell, r0) == 0.0);
        CHECK(std::abs(profile_f(ell, 0.0) - ell) <= 1e-10 * ell);
    }
}

TEST_CASE("profile midpoint reference value") {
    const double r0 = compute_r0(compute_t_lim(kFourPi));
    CHECK(profile_f(kFourPi, r0 / 2.0) ==
          doctest::Approx(5.1301993206474564).epsilon(1e-12));
}

TEST_CASE("profile is increasing in r") {
    const double r0 = compute_r0(compute_t_lim(10.0));
    double prev = -1.0;
    for (int i = 0; i <= 16; ++i) {
        const double r = r0 + (0.0 - r0) * static_cast<double>(i) / 16.0;
        const double v = profile_f(10.0, r);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("profile rejects radii outside the tube") {
    const double r0 = compute_r0(compute_t_lim(kFourPi));
    CHECK_THROWS_AS(profile_f(kFourPi, r0 - 1e-6), std::domain_error);
    CHECK_THROWS_AS(profile_f(kFourPi, 1e-6), std::domain_error);
    CHECK_THROWS_AS(profile_f(kTwoPi, 0.0), std::domain_error);
}

TEST_CASE("hyperbolic identity used by the closed form") {
    // cosh(atanh(sqrt(t))) == 1/sqrt(1 - t)
    for (double t : {0.01, 0.5, 0.75, 0.99}) {
        const double lhs = std::cosh(std::atanh(std::sqrt(t)));
        const double rhs = 1.0 / std::sqrt(1.0 - t);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
}

TEST_CASE("disk area closed form at reference lengths") {
    // 8*pi/3
    CHECK(disk_area_closed_form(kFourPi) ==
          doctest::Approx(8.377580409572782).epsilon(1e-14));
    CHECK(disk_area_closed_form(100.0) ==
          doctest::Approx(94.088260255825107).epsilon(1e-14));
    CHECK_THROWS_AS(disk_area_closed_form(kTwoPi), std::domain_error);
}

TEST_CASE("quadrature agrees with the closed form within its tolerance") {
    for (double ell : {6.3, kFourPi, 40.0, 100.0}) {
        for (double tol : {1e-8, 1e-10}) {
            CAPTURE(ell);
            CAPTURE(tol);
            const double q = disk_area_quadrature(ell, tol);
            const double c = disk_area_closed_form(ell);
            CHECK(std::abs(q - c) <= tol + 1e-12);
        }
    }
}

TEST_CASE("quadrature rejects a bad tolerance") {
    CHECK_THROWS_AS(disk_area_quadrature(kFourPi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(disk_area_quadrature(kFourPi, -1e-8), std::invalid_argument);
}

TEST_CASE("curvature bound value and sign") {
    CHECK(curvature_bound(kFourPi, 0.9) == doctest::Approx(-0.675).epsilon(1e-15));
    CHECK(curvature_bound(40.0, 0.5) < 0.0);
    CHECK_THROWS_AS(curvature_bound(kTwoPi, 0.5), std::domain_error);
    CHECK_THROWS_AS(curvature_bound(40.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(curvature_bound(40.0, 1.0), std::domain_error);
}

TEST_CASE("area bounds from curvature") {
    // 2*pi*(-2)/(-0.675) = 4*pi/0.675
    CHECK(minimal_surface_area_bound(-2, -0.675) ==
          doctest::Approx(18.616845354606182).epsilon(1e-13));
    // Genus 2 closed surface, chi = -2, kappa = -1, zeta = 1/2: 8*pi.
    CHECK(sweepout_area_bound(-2, -1.0, 0.5) ==
          doctest::Approx(25.132741228718345).epsilon(1e-14));
    CHECK_THROWS_AS(minimal_surface_area_bound(0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(minimal_surface_area_bound(2, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(minimal_surface_area_bound(-2, 0.0), std::domain_error);
    CHECK_THROWS_AS(minimal_surface_area_bound(-2, 0.5), std::domain_error);
    CHECK_THROWS_AS(sweepout_area_bound(-2, -1.0, 1.5), std::domain_error);
}

TEST_CASE("zeta selection at the reference point") {
    CHECK(zeta_feasibility_floor(40.0, 2) ==
          doctest::Approx(0.6104943689570685).epsilon(1e-14));
    CHECK(select_zeta(40.0, 2) == doctest::Approx(0.8052471844785342).epsilon(1e-14));
}

TEST_CASE("zeta selection enforces the length hypothesis") {
    const double six_pi = 3.0 * kTwoPi;
    CHECK_THROWS_WITH_AS(select_zeta(six_pi, 2),
                         "hypothesis not met: no valid zeta guaranteed", std::domain_error);
    CHECK_THROWS_AS(select_zeta(10.0, 2), std::domain_error);
    CHECK_THROWS_AS(select_zeta(40.0, 4), std::domain_error);  // needs > 14*pi
    CHECK_NOTHROW(select_zeta(six_pi * 1.001, 2));
}

TEST_CASE("zeta selection treats genus 1 as vacuous and rejects nonsense") {
    CHECK_THROWS_AS(select_zeta(100.0, 1), std::domain_error);
    CHECK_THROWS_AS(select_zeta(100.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_zeta(100.0, -3), std::invalid_argument);
}

TEST_CASE("selected zeta is feasible across genera and lengths") {
    for (int g = 2; g <= 8; ++g) {
        const double thr = kTwoPi * (2 * g - 1);
        for (double factor : {1.0001, 1.01, 1.5, 5.0, 40.0}) {
            const double ell = thr * factor;
            const double zeta = select_zeta(ell, g);
            const double zeta0 = zeta_feasibility_floor(ell, g);
            CAPTURE(g);
            CAPTURE(factor);
            CHECK(zeta > zeta0);
            CHECK(zeta < 1.0);
            // The defining inequality: ell > (2*pi/zeta^2)*(2g - 2 + zeta^2).
            CHECK(ell > (kTwoPi / (zeta * zeta)) * (2 * g - 2 + zeta * zeta));
            // Which chains to the disk-area comparison
            // zeta*ell^2/(ell + 2*pi) > 2*pi*(2g - 2)/|kappa_max|.
            const double kappa = curvature_bound(ell, zeta);
            CHECK(zeta * disk_area_closed_form(ell) >
                  kTwoPi * (2 * g - 2) / std::abs(kappa));
        }
    }
}

TEST_CASE("certificate assembles consistent fields") {
    const MetricCertificate c = make_certificate(40.0, 30.0, 0.75);
    CHECK(c.slope_length == 40.0);
    CHECK(c.zeta == 0.75);
    CHECK(c.t_lim == doctest::Approx(compute_t_lim(40.0)).epsilon(1e-15));
    CHECK(c.r0 == doctest::Approx(compute_r0(c.t_lim)).epsilon(1e-15));
    CHECK(c.kappa_max == doctest::Approx(curvature_bound(30.0, 0.75)).epsilon(1e-15));
    CHECK(c.disk_area_limit == doctest::Approx(disk_area_closed_form(40.0)).epsilon(1e-15));
    CHECK(c.disk_area_lower_bound ==
          doctest::Approx(0.75 * c.disk_area_limit).epsilon(1e-15));
    CHECK(c.kappa_max < 0.0);
    CHECK_THROWS_AS(make_certificate(5.0, 30.0, 0.75), std::domain_error);
    CHECK_THROWS_AS(make_certificate(40.0, 5.0, 0.75), std::domain_error);
    CHECK_THROWS_AS(make_certificate(40.0, 30.0, 1.25), std::domain_error);
}
