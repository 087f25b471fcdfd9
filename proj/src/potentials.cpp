#include "vortex_born/potentials.hpp"

#include <cmath>
#include <numbers>

#include "vortex_born/units.hpp"

namespace vborn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void validate(const PotentialSpec& pot) {
    std::visit(overloaded{
                   [](const Yukawa& y) {
                       if (!(y.mu > 0.0) || !std::isfinite(y.mu)) throw DomainError("yukawa: mu must be > 0");
                       if (!std::isfinite(y.v0)) throw DomainError("yukawa: V0 must be finite");
                   },
                   [](const Hydrogen1s& h) {
                       if (!(h.a0 > 0.0) || !std::isfinite(h.a0)) throw DomainError("hydrogen: a0 must be > 0");
                   },
               },
               pot);
}

double typical_radius(const PotentialSpec& pot) {
    validate(pot);
    return std::visit(overloaded{
                          [](const Yukawa& y) { return 1.0 / y.mu; },
                          [](const Hydrogen1s& h) { return 0.5 * h.a0; },
                      },
                      pot);
}

BornDenominator denominator_form(const PotentialSpec& pot) {
    validate(pot);
    return std::visit(overloaded{
                          [](const Yukawa& y) {
                              return BornDenominator{-2.0 * units::kElectronMass * y.v0, y.mu * y.mu, 1.0, 1};
                          },
                          [](const Hydrogen1s& h) {
                              return BornDenominator{0.5 * h.a0, 1.0, 0.25 * h.a0 * h.a0, 2};
                          },
                      },
                      pot);
}

double born_amplitude(const PotentialSpec& pot, double q2) {
    if (!(q2 >= 0.0)) throw DomainError("born_amplitude: q^2 must be >= 0");
    const auto form = denominator_form(pot);
    const double inv = 1.0 / (form.offset + form.slope * q2);
    return form.max_power == 1 ? form.scale * inv : form.scale * (inv + inv * inv);
}

double plane_wave_dcs(const PotentialSpec& pot, double p, double theta) {
    if (!(p > 0.0)) throw DomainError("plane_wave_dcs: p must be > 0");
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("plane_wave_dcs: theta must lie in [0, pi]");
    const double s = std::sin(0.5 * theta);
    const double f = born_amplitude(pot, 4.0 * p * p * s * s);
    return f * f;
}

Estimate plane_wave_total(const PotentialSpec& pot, double p, const QuadratureBudget& budget) {
    if (!(p > 0.0)) throw DomainError("plane_wave_total: p must be > 0");
    return integrate_sphere_axial([&](double theta) { return plane_wave_dcs(pot, p, theta); }, budget);
}

double yukawa_total_analytic(const Yukawa& pot, double p) {
    const double me = units::kElectronMass;
    const double mu2 = pot.mu * pot.mu;
    return 16.0 * std::numbers::pi * me * me * pot.v0 * pot.v0 / (mu2 * (mu2 + 4.0 * p * p));
}

}  // namespace vborn
