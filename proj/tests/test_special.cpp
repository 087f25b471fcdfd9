#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "vortex_born/special.hpp"

using namespace vborn;

namespace {

// Independent power series for J_m, good for small arguments.
double j_series(int m, double x) {
    double term = std::pow(0.5 * x, m) / std::tgamma(m + 1.0), sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= -(0.25 * x * x) / (double(k) * double(k + m));
        sum += term;
    }
    return sum;
}

double i0_series(double x, int terms) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < terms; ++k) {
        term *= (0.25 * x * x) / (double(k) * double(k));
        sum += term;
    }
    return sum;
}

// Kernel by brute-force trapezoid sum, independent of the library rule.
std::complex<double> kernel_brute(const KernelArgs& a, int n = 8192) {
    std::complex<double> sum{};
    for (int j = 0; j < n; ++j) {
        const double psi = 2.0 * std::numbers::pi * j / n;
        const std::complex<double> num = std::polar(1.0, a.m * psi + a.kb * std::cos(psi + a.chi));
        sum += num / std::pow(a.alpha - a.beta * std::cos(psi), a.power);
    }
    return sum / double(n);
}

const QuadratureBudget kTight{1e-12, 1e-300, std::int64_t{1} << 20};

}  // namespace

TEST_CASE("bessel_j examples") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    // First zero of J0 by bisection on the series oracle.
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (j_series(0, lo) * j_series(0, mid) <= 0.0 ? hi : lo) = mid;
    }
    CHECK(lo == approx(2.4048256).epsilon(1e-7));
    CHECK(std::abs(bessel_j(0, lo)) < 1e-12);
    CHECK(std::abs(bessel_j(0, 2.4048256)) < 1e-6);
}

TEST_CASE("bessel_j against the series and the standard library") {
    for (const int m : {0, 1, 2, 5, 10})
        for (const double x : {0.1, 1.0, 4.0, 9.0}) CHECK(std::abs(bessel_j(m, x) - j_series(m, x)) < 1e-12);
    for (const int m : {0, 1, 3, 17, 50, 100, 300})
        for (const double x : {0.5, 7.3, 55.0, 140.0, 420.0, 999.0})
            CHECK(std::abs(bessel_j(m, x) - std::cyl_bessel_j(double(m), x)) < 1e-12);
}

TEST_CASE("bessel_j symmetries") {
    for (const int m : {1, 2, 7})
        for (const double x : {0.3, 3.0, 30.0}) {
            CHECK(bessel_j(-m, x) == approx((m % 2 ? -1.0 : 1.0) * bessel_j(m, x)).epsilon(1e-15));
            CHECK(bessel_j(m, -x) == approx((m % 2 ? -1.0 : 1.0) * bessel_j(m, x)).epsilon(1e-15));
            // Recurrence J_{m-1} + J_{m+1} = (2m/x) J_m.
            CHECK(std::abs(bessel_j(m - 1, x) + bessel_j(m + 1, x) - 2.0 * m / x * bessel_j(m, x)) < 1e-13);
        }
}

TEST_CASE("bessel_i0 examples") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == approx(i0_series(1.0, 30)).epsilon(1e-14));
    CHECK(bessel_i0(1.0) == approx(1.2660659).epsilon(1e-7));
    CHECK(bessel_i0(10.0) == approx(i0_series(10.0, 80)).epsilon(1e-13));
    CHECK(bessel_i0(10.0) == approx(2815.7167).epsilon(1e-7));
    CHECK_THROWS_AS(bessel_i0(701.0), OverflowError);
    CHECK_THROWS_AS(bessel_i0(-1.0), DomainError);
}

TEST_CASE("bessel_i0_scaled stays finite and matches the library") {
    for (const double x : {0.0, 0.5, 12.0, 29.9, 30.1, 80.0, 650.0})
        CHECK(bessel_i0_scaled(x) == approx(std::cyl_bessel_i(0.0, x) * std::exp(-x)).epsilon(1e-13));
    const double big = bessel_i0_scaled(1e8);
    CHECK(std::isfinite(big));
    CHECK(big == approx(1.0 / std::sqrt(2.0 * std::numbers::pi * 1e8)).epsilon(1e-8));
}

TEST_CASE("kernel_im examples") {
    CHECK(kernel_im({1, 0, 2.0, 0.0, 0.0, 0.0}).value.real() == approx(0.5).epsilon(1e-15));
    const auto k1 = kernel_im({1, 1, 2.0, 1.0, 0.0, 0.0});
    CHECK(k1.value.real() == approx(0.1547005).epsilon(1e-6));
    CHECK(k1.value.real() == approx(kernel_brute({1, 1, 2.0, 1.0, 0.0, 0.0}).real()).epsilon(1e-12));
    // beta = 0: e^{-i pi} J_2(1.5) / 3.
    const auto k2 = kernel_im({1, 2, 3.0, 0.0, 1.5, 0.0});
    CHECK(k2.value.real() == approx(-0.0773626).epsilon(1e-6));
    CHECK(k2.value.real() == approx(-j_series(2, 1.5) / 3.0).epsilon(1e-12));
    CHECK(std::abs(k2.value.imag()) < 1e-15);
}

TEST_CASE("kernel_im_closed examples") {
    CHECK(kernel_im_closed({1, 0, 2.0, 1.0, 0.0, 0.0})->real() == approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(kernel_im_closed({1, 1, 2.0, 1.0, 0.0, 0.0})->real() == approx(0.1547005).epsilon(1e-6));
    CHECK(kernel_im_closed({1, 0, 4.0, 0.0, 0.0, 0.0})->real() == approx(0.25).epsilon(1e-15));
    CHECK_FALSE(kernel_im_closed({1, 1, 2.0, 1.0, 0.5, 0.0}).has_value());
    CHECK_THROWS_AS(kernel_im_closed({1, 1, 1.0, 1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("kernel argument validation") {
    CHECK_THROWS_AS(kernel_im({3, 0, 2.0, 1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(kernel_im({1, 0, 1.0, 2.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(kernel_im({1, 0, 2.0, -0.5, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(kernel_im({1, 0, 2.0, 1.0, -1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(kernel_im({1, 0, NAN, 1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("property: closed form equals quadrature for kb = 0") {
    for (const int power : {1, 2})
        for (const int m : {-4, -1, 0, 1, 2, 6})
            for (const double beta : {0.05, 0.7, 1.5, 1.95}) {
                const KernelArgs args{power, m, 2.0, beta, 0.0, 0.0};
                const auto closed = *kernel_im_closed(args);
                // Rounding floor of the reference sum itself is ~1e-16.
                CHECK(std::abs(kernel_brute(args, 1 << 14) - closed) <= 1e-10 * std::abs(closed) + 1e-15);
            }
}

TEST_CASE("property: quadrature path matches brute force with kb > 0") {
    for (const int power : {1, 2})
        for (const int m : {0, 1, 3})
            for (const double chi : {0.0, 0.8}) {
                const KernelArgs args{power, m, 2.5, 1.2, 3.0, chi};
                const auto q = kernel_im(args, kTight);
                REQUIRE(q.converged);
                const auto ref = kernel_brute(args);
                CHECK(std::abs(q.value - ref) <= 1e-10 * std::abs(ref));
            }
}

TEST_CASE("property: reflection symmetry of the kernel at chi = 0") {
    // psi -> -psi gives I_m = I_{-m}; for kb = 0 the kernel is also real, so
    // I_m = conj(I_{-m}). With kb > 0 the conjugate flips the sign of kb.
    for (const int m : {1, 2, 5})
        for (const double kb : {0.0, 0.7, 4.0}) {
            const auto a = kernel_im({1, m, 2.0, 1.3, kb, 0.0}, kTight).value;
            const auto b = kernel_im({1, -m, 2.0, 1.3, kb, 0.0}, kTight).value;
            CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
            if (kb == 0.0) CHECK(std::abs(a - std::conj(b)) <= 1e-10 * std::abs(a));
        }
}

TEST_CASE("property: small-beta power law with slope |m|") {
    const double alpha = 2.0;
    for (const int m : {0, 1, 2, 4}) {
        const double b1 = 1e-4 * alpha, b2 = 1e-2 * alpha;
        const double k1 = std::abs(kernel_im({1, m, alpha, b1, 0.0, 0.0}).value);
        const double k2 = std::abs(kernel_im({1, m, alpha, b2, 0.0, 0.0}).value);
        const double slope = std::log(k2 / k1) / std::log(b2 / b1);
        CHECK(slope == approx(double(m)).epsilon(0.01).scale(1.0));
        if (m > 0) CHECK(k1 == approx(std::pow(b1 / (2 * alpha), m) / alpha).epsilon(1e-6));
    }
}

TEST_CASE("property: power-2 kernel is minus the alpha derivative of power-1") {
    for (const int m : {0, 1, 3})
        for (const double kb : {0.0, 1.1}) {
            const double alpha = 2.0, h = 1e-5 * alpha;
            auto p1 = [&](double a) { return kernel_im({1, m, a, 1.2, kb, 0.4}, kTight).value; };
            const auto fd = -(p1(alpha + h) - p1(alpha - h)) / (2 * h);
            const auto p2 = kernel_im({2, m, alpha, 1.2, kb, 0.4}, kTight).value;
            CHECK(std::abs(fd - p2) <= 1e-6 * std::abs(p2));
            const auto hyd = kernel_im_hydrogenic({1, m, alpha, 1.2, kb, 0.4}, kTight).value;
            CHECK(std::abs(hyd - (p1(alpha) + p2)) <= 1e-9 * std::abs(hyd));
        }
}
