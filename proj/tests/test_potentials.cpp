#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <numbers>

#include "vortex_born/potentials.hpp"

using namespace vborn;

namespace {

constexpr double kPi = std::numbers::pi;

// Simpson rule over q in [0, 2p]: sigma = (2 pi / p^2) int |f(q)|^2 q dq.
double total_by_simpson(const PotentialSpec& pot, double p, int n = 20000) {
    const double h = 2 * p / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double q = i * h;
        const double f = born_amplitude(pot, q * q);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += w * f * f * q;
    }
    return 2 * kPi / (p * p) * s * h / 3.0;
}

}  // namespace

TEST_CASE("born amplitude examples") {
    CHECK(born_amplitude(Yukawa{1.0, 1.0}, 0.0) == -2.0);
    CHECK(born_amplitude(Hydrogen1s{1.0}, 0.0) == 1.0);
    CHECK(born_amplitude(Hydrogen1s{1.0}, 4.0) == approx(0.375).epsilon(1e-15));
    CHECK(born_amplitude(Hydrogen1s{2.0}, 1.0) == approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(born_amplitude(Yukawa{1.0, 1.0}, -1.0), DomainError);
}

TEST_CASE("plane-wave dcs examples") {
    CHECK(plane_wave_dcs(Yukawa{1.0, 0.5}, 10.0, 0.0) == approx(std::pow(2.0 / 0.25, 2)).epsilon(1e-15));
    const double x = 100.0;
    CHECK(plane_wave_dcs(Hydrogen1s{1.0}, 10.0, kPi) ==
          approx(std::pow(0.5 * (1 / (1 + x) + 1 / ((1 + x) * (1 + x))), 2)).epsilon(1e-12));
    CHECK(plane_wave_dcs(Hydrogen1s{1.0}, 10.0, kPi) == approx(2.49951e-5).epsilon(1e-5));
    CHECK_THROWS_AS(plane_wave_dcs(Hydrogen1s{1.0}, 10.0, 4.0), DomainError);
    CHECK_THROWS_AS(plane_wave_dcs(Hydrogen1s{1.0}, 0.0, 1.0), DomainError);
}

TEST_CASE("plane-wave totals") {
    const Yukawa y{1.0, 1.0};
    CHECK(plane_wave_total(y, 10.0).value == approx(16 * kPi / 401).epsilon(1e-6));
    CHECK(yukawa_total_analytic(y, 10.0) == approx(16 * kPi / 401).epsilon(1e-15));
    CHECK(yukawa_total_analytic(y, 10.0) == approx(0.1253503).epsilon(1e-6));
    CHECK(plane_wave_total(Yukawa{2.0, 1.0}, 10.0).value ==
          approx(4 * plane_wave_total(y, 10.0).value).epsilon(1e-12));
    for (const double p : {0.5, 3.0, 10.0, 10.0 / std::cos(kPi / 6)}) {
        CHECK(plane_wave_total(Hydrogen1s{1.0}, p).value == approx(total_by_simpson(Hydrogen1s{1.0}, p)).epsilon(1e-8));
        CHECK(plane_wave_total(Yukawa{0.7, 0.3}, p).value == approx(yukawa_total_analytic({0.7, 0.3}, p)).epsilon(1e-8));
    }
}

TEST_CASE("denominator form reproduces the amplitude") {
    for (const PotentialSpec pot : {PotentialSpec{Yukawa{1.3, 0.4}}, PotentialSpec{Hydrogen1s{1.7}}}) {
        const auto d = denominator_form(pot);
        for (const double q2 : {0.0, 0.3, 5.0, 400.0}) {
            const double w = d.offset + d.slope * q2;
            double sum = 0.0;
            for (int n = 1; n <= d.max_power; ++n) sum += std::pow(w, -n);
            CHECK(d.scale * sum == approx(born_amplitude(pot, q2)).epsilon(1e-14));
        }
    }
}

TEST_CASE("validation and typical radius") {
    CHECK_THROWS_AS(validate(Yukawa{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate(Hydrogen1s{-1.0}), DomainError);
    CHECK_NOTHROW(validate(Hydrogen1s{1.0}));
    CHECK(typical_radius(Yukawa{1.0, 4.0}) == 0.25);
    CHECK(typical_radius(Hydrogen1s{1.0}) == 0.5);
}

TEST_CASE("property: amplitudes are monotone in q and fall as q^-2 or q^-4") {
    double prev_y = 1e300, prev_h = 1e300;
    for (int i = 0; i <= 50; ++i) {
        const double q2 = 0.1 * i * i;
        const double ay = std::abs(born_amplitude(Yukawa{1.0, 1.0}, q2));
        const double ah = born_amplitude(Hydrogen1s{1.0}, q2);
        CHECK(ay <= prev_y);
        CHECK(ah <= prev_h);
        prev_y = ay, prev_h = ah;
    }
    const double q1 = 1e3, q2 = 1e4;
    CHECK(std::log(std::abs(born_amplitude(Yukawa{1.0, 1.0}, q2 * q2) / born_amplitude(Yukawa{1.0, 1.0}, q1 * q1))) /
              std::log(q2 / q1) ==
          approx(-2.0).epsilon(1e-4));
    CHECK(std::log(born_amplitude(Hydrogen1s{1.0}, q2 * q2) / born_amplitude(Hydrogen1s{1.0}, q1 * q1)) /
              std::log(q2 / q1) ==
          approx(-2.0).epsilon(1e-4));
}
