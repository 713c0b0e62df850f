#include <doctest.h>

#include <cmath>
#include <functional>

#include "reference.hpp"
#include "rieszwave/analytic.hpp"
#include "rieszwave/oracle.hpp"

using namespace rieszwave;
using namespace rieszwave::oracle;

namespace {
constexpr double kSpectral_1_17_1 = 0.17256040577773302;  // spectral_u(1, 1.7, 1)
constexpr double kG10 = -0.27650001553280801;             // G(10)

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("quadrature: pinned integrals") {
    CHECK(rel_err(quadrature([](double) { return 1.0; }, 0.0, 1.0).value, 1.0) <= 1e-14);
    CHECK(rel_err(quadrature([](double x) { return std::sin(x); }, 0.0, M_PI).value, 2.0) <=
          1e-12);
    // oscillatory panel case, cross-checked against the Romberg reference
    const double got =
        quadrature([](double v) { return std::cos(40.0 * (v * v - 1.0)); }, 0.0, 1.0,
                   {1e-12, 1e-12, 2000})
            .value;
    CHECK(std::fabs(got - testref::ref_G(40.0)) <= 1e-11);
}

TEST_CASE("quadrature: error estimate covers the true error") {
    struct Case {
        std::function<double(double)> f;
        double a, b, exact;
    };
    const Case corpus[] = {
        {[](double) { return 1.0; }, 0.0, 1.0, 1.0},
        {[](double x) { return std::sin(x); }, 0.0, M_PI, 2.0},
        {[](double x) { return std::exp(-x * x); }, 0.0, 3.0,
         0.88620734825702368962},  // sqrt(pi)/2 erf(3)
        {[](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, M_PI / 4.0},
        {[](double v) { return std::cos(40.0 * (v * v - 1.0)); }, 0.0, 1.0,
         testref::ref_G(40.0)},
    };
    for (const auto& c : corpus) {
        const auto r = quadrature(c.f, c.a, c.b, {1e-10, 1e-10, 2000});
        CHECK(std::fabs(r.value - c.exact) <= r.error_estimate + 1e-15);
    }
}

TEST_CASE("quadrature: domain and subdivision errors") {
    CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 1.0, 0.0), std::domain_error);
    QuadratureControls starved{1e-14, 1e-14, 10};
    CHECK_THROWS_AS(
        quadrature([](double v) { return std::cos(3000.0 * v * v); }, 0.0, 1.0, starved),
        non_convergence_error);
}

TEST_CASE("profile_G: pinned values and delta-profile identity") {
    CHECK(profile_G(0.0) == 1.0);
    CHECK(std::fabs(profile_G(10.0) - kG10) <= 1e-12);
    CHECK(std::fabs(profile_G(40.0) - testref::ref_G(40.0)) <= 1e-11);
    // 2 f(xi) = G(xi/4)
    for (double xi : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 40.0})
        CHECK(std::fabs(2.0 * analytic::u_delta_profile(xi) - profile_G(xi / 4.0)) <= 1e-9);
    CHECK_THROWS_AS(profile_G(-1.0), std::domain_error);
}

TEST_CASE("asymptotic branches agree with the quadrature branches") {
    for (double c : {36.0, 40.0, 60.0, 150.0, 300.0})
        CHECK(std::fabs(detail::profile_G_asymptotic(c) - profile_G(c, {1e-13, 1e-13, 4000})) <=
              2e-11);
    for (double c : {150.0, 200.0, 400.0})
        CHECK(std::fabs(detail::profile_G1_asymptotic(c) -
                        detail::profile_G1_quadrature(c, {1e-13, 1e-13, 4000})) <= 1e-7);
    CHECK(detail::profile_G1_quadrature(0.0) == 0.0);
    // G1 approaches pi/4 from its oscillation band
    CHECK(std::fabs(detail::profile_G1_quadrature(300.0) - M_PI / 4.0) <= 0.06);
}

TEST_CASE("spectral_u: t = 0 reproduces the Gaussian datum") {
    for (double x0 : {1.0, std::sqrt(0.5), std::sqrt(0.1)}) {
        PhysicalParams p{1, 1, x0};
        for (double x : {0.0, 0.6, -1.0, 2.5, -5.0})
            CHECK(std::fabs(spectral_u({x, 0}, p) - analytic::gaussian_ic(x, p)) <= 1e-9);
    }
}

TEST_CASE("spectral_u: pinned value, evenness, domain") {
    CHECK(std::fabs(spectral_u({1, 1.7}, {1, 1, 1}) - kSpectral_1_17_1) <= 1e-9);
    for (double x : {0.4, 1.3, 3.7})
        CHECK(std::fabs(spectral_u({x, 1.7}, {1, 1, 1}) - spectral_u({-x, 1.7}, {1, 1, 1})) <=
              1e-12);
    CHECK_THROWS_AS(spectral_u({1, 1}, {1, 1, 0}), std::domain_error);
}

TEST_CASE("fresnel_delta_u: closed form matches the series delta solution") {
    // |u_delta - fresnel| <= 1e-9 across xi in [0.01, 40]
    for (double xi : {0.01, 0.1, 0.5, 2.0, 9.0, 9.4, 20.0, 40.0}) {
        const EvalPoint pt{1.0, std::sqrt(xi)};
        const PhysicalParams p{1, 1, 0};
        CHECK(std::fabs(fresnel_delta_u(pt, p) - analytic::u_delta(pt, p)) <= 1e-9);
    }
    const PhysicalParams p{1, 1, 0};
    CHECK(fresnel_delta_u({2.0, 1.3}, p) == fresnel_delta_u({-2.0, 1.3}, p));
    // (kappa, t) -> (kappa/4, 2t) leaves kappa t^2 bit-identical
    CHECK(fresnel_delta_u({1.5, 1.0}, {1, 1, 0}) == fresnel_delta_u({1.5, 2.0}, {1, 0.25, 0}));
    CHECK(fresnel_delta_u({1.0, 0.0}, p) == 0.0);
    CHECK_THROWS_AS(fresnel_delta_u({0, 1}, p), std::domain_error);
}

TEST_CASE("convolution_u agrees with spectral_u to 1e-8") {
    const struct {
        double x, t, x0;
    } pts[] = {{1.0, 1.7, 1.0},
               {3.0, 1.7, std::sqrt(0.5)},
               {0.5, 1.7, std::sqrt(0.1)},
               {2.0, 5.0, 1.0},
               {3.0, 6.5, 1.0},
               {1.0, 6.5, std::sqrt(0.1)},
               {0.2, 0.1, 1.0},
               {7.0, 2.5, std::sqrt(0.5)}};
    for (auto& c : pts) {
        const PhysicalParams p{1, 1, c.x0};
        const double conv = convolution_u({c.x, c.t}, p);
        const double spec = spectral_u({c.x, c.t}, p, {1e-12, 1e-12, 20000});
        CHECK(std::fabs(conv - spec) <= 1e-8);
    }
}

TEST_CASE("convolution_u: short-time limit and symmetry") {
    const PhysicalParams p{1, 1, 1};
    const double g = analytic::gaussian_ic(0.8, p);
    const double d02 = std::fabs(convolution_u({0.8, 0.2}, p) - g);
    const double d002 = std::fabs(convolution_u({0.8, 0.02}, p) - g);
    CHECK(d002 < d02);       // approaches the datum as t -> 0
    CHECK(d002 <= 1e-3);
    CHECK(convolution_u({1.1, 0.9}, p) == convolution_u({-1.1, 0.9}, p));
    CHECK_THROWS_AS(convolution_u({1, 1}, {1, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(convolution_u({1, 0}, p), std::domain_error);
}
