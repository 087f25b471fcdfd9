#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <numbers>

#include "vortex_born/potentials.hpp"
#include "vortex_born/quadrature.hpp"

using namespace vborn;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("periodic mean of a constant") {
    const auto r = integrate_periodic([](double) { return 1.0; }, 0);
    CHECK(r.converged);
    CHECK(r.value.real() == approx(1.0).epsilon(1e-15));
}

TEST_CASE("periodic mean of a pure Fourier mode vanishes") {
    const auto r = integrate_periodic([](double psi) { return std::polar(1.0, 3.0 * psi); }, 3);
    CHECK(std::abs(r.value) < 1e-13);
}

TEST_CASE("periodic mean of 1/(2 - cos psi)") {
    const auto r = integrate_periodic([](double psi) { return 1.0 / (2.0 - std::cos(psi)); }, 0);
    // Independent check: plain 4096-node rectangle sum.
    double sum = 0.0;
    for (int j = 0; j < 4096; ++j) sum += 1.0 / (2.0 - std::cos(2.0 * kPi * j / 4096.0));
    CHECK(r.value.real() == approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(r.value.real() == approx(sum / 4096.0).epsilon(1e-12));
    CHECK(r.value.real() == approx(0.5773503).epsilon(1e-7));
}

TEST_CASE("periodic rule reports non-convergence but returns a value") {
    const QuadratureBudget budget{1e-12, 1e-300, 64};
    const auto r = integrate_periodic([](double psi) { return std::cos(200.0 * std::sin(psi)); }, 0, budget);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value.real()));
    CHECK(r.nodes_used <= 64);
}

TEST_CASE("half-line Gaussian integrals") {
    const double k0 = 5.0, s = 1.0;
    SUBCASE("normalised Gaussian mass") {
        const auto r = integrate_halfline([&](double k) { return std::exp(-(k - k0) * (k - k0) / (2 * s * s)); }, k0, s);
        // Exact over [0, inf): sigma sqrt(pi/2) (1 + erf(k0 / (sqrt2 sigma))).
        const double exact = s * std::sqrt(kPi / 2) * (1.0 + std::erf(k0 / (std::numbers::sqrt2 * s)));
        CHECK(r.converged);
        CHECK(r.value.real() == approx(exact).epsilon(1e-8));
        CHECK(r.value.real() == approx(2.5066283).epsilon(1e-6));
    }
    SUBCASE("zero integrand") {
        const auto r = integrate_halfline([](double) { return 0.0; }, k0, s);
        CHECK(r.value.real() == 0.0);
    }
    SUBCASE("first moment against a Riemann sum") {
        auto f = [&](double k) { return k * std::exp(-(k - k0) * (k - k0) / (2 * s * s)); };
        const auto r = integrate_halfline(f, k0, s);
        double riemann = 0.0;
        const int n = 1000000;
        const double h = 20.0 / n;
        for (int i = 0; i < n; ++i) riemann += f((i + 0.5) * h) * h;
        CHECK(r.value.real() == approx(riemann).epsilon(1e-8));
        CHECK(r.value.real() == approx(12.533141).epsilon(1e-6));
    }
    SUBCASE("clipped lower end") {
        // int_0^inf sqrt(k) exp(-k^2/2) dk = Gamma(3/4) 2^{-1/4}; the tail beyond 6 widths is ~6e-9.
        const auto r = integrate_halfline([](double k) { return std::sqrt(k) * std::exp(-k * k / 2); }, 0.0, 1.0);
        CHECK(r.value.real() == approx(std::tgamma(0.75) * std::pow(2.0, -0.25)).epsilon(1e-7));
    }
    SUBCASE("non-positive width") {
        CHECK_THROWS_AS(integrate_halfline([](double) { return 1.0; }, 1.0, 0.0), DomainError);
        CHECK_THROWS_AS(integrate_halfline([](double) { return 1.0; }, 1.0, -1.0), DomainError);
    }
}

TEST_CASE("sphere integrals") {
    CHECK(integrate_sphere([](double, double) { return 1.0; }).value == approx(4 * kPi).epsilon(1e-12));
    CHECK(integrate_sphere([](double t, double) { return std::cos(t) * std::cos(t); }).value ==
          approx(4 * kPi / 3).epsilon(1e-12));
    const Yukawa y{1.0, 1.0};
    const auto total = integrate_sphere([&](double t, double) { return plane_wave_dcs(y, 10.0, t); });
    // 16 pi m^2 V0^2 / (mu^2 (mu^2 + 4 p^2)), written out independently.
    CHECK(total.value == approx(16.0 * kPi / 401.0).epsilon(1e-8));
}

TEST_CASE("budget and rule validation") {
    CHECK_THROWS_AS((QuadratureBudget{0.0, 1e-14, 1024}.validate()), DomainError);
    CHECK_THROWS_AS((QuadratureBudget{1e-6, 0.0, 1024}.validate()), DomainError);
    CHECK_THROWS_AS((QuadratureBudget{1e-6, 1e-14, 8}.validate()), DomainError);
    CHECK_THROWS_AS(gauss_legendre(3), DomainError);
    CHECK_THROWS_AS(gauss_legendre(4096), DomainError);
    const auto& rule = gauss_legendre(16);
    double w = 0.0, x2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        w += rule.weights[i];
        x2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    CHECK(w == approx(2.0).epsilon(1e-14));
    CHECK(x2 == approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("converged results honour the tolerance contract") {
    const QuadratureBudget budget{1e-9, 1e-14, 1 << 20};
    const auto r = integrate_periodic([](double psi) { return std::exp(std::cos(psi)); }, 0, budget);
    REQUIRE(r.converged);
    CHECK(r.est_error <= budget.tolerance_for(std::abs(r.value)));
    CHECK(r.value.real() == approx(std::cyl_bessel_i(0.0, 1.0)).epsilon(1e-13));
}
