#pragma once

// Central potentials and their first-Born plane-wave amplitudes.

#include <variant>

#include "vortex_born/quadrature.hpp"

namespace vborn {

/// U(r) = V0 exp(-mu r) / r.
struct Yukawa {
    double v0 = 1.0;
    double mu = 1.0;
};

/// Static potential of a ground-state hydrogen atom.
struct Hydrogen1s {
    double a0 = 1.0;
};

using PotentialSpec = std::variant<Yukawa, Hydrogen1s>;

/// DomainError unless mu > 0 (Yukawa) or a0 > 0 (hydrogen).
void validate(const PotentialSpec& pot);

/// Typical radius of action: 1/mu for Yukawa, a0/2 for hydrogen.
double typical_radius(const PotentialSpec& pot);

/// Both amplitudes have the form f(q^2) = scale * sum_{n=1}^{max_power} w^-n
/// with w = offset + slope q^2. The twisted amplitude is built on this.
struct BornDenominator {
    double scale;
    double offset;
    double slope;
    int max_power;
};

BornDenominator denominator_form(const PotentialSpec& pot);

/// Yukawa: -2 m_e V0 / (q^2 + mu^2).
/// Hydrogen: (a0/2) [1/(1 + (q a0/2)^2) + 1/(1 + (q a0/2)^2)^2].
double born_amplitude(const PotentialSpec& pot, double q2);

/// |f(q)|^2 with q^2 = 4 p^2 sin^2(theta/2).
double plane_wave_dcs(const PotentialSpec& pot, double p, double theta);

/// Integral of plane_wave_dcs over the sphere.
Estimate plane_wave_total(const PotentialSpec& pot, double p, const QuadratureBudget& budget = {});

/// 16 pi m_e^2 V0^2 / [mu^2 (mu^2 + 4 p^2)].
double yukawa_total_analytic(const Yukawa& pot, double p);

}  // namespace vborn
