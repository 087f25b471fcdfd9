#pragma once

// Hartree atomic units: m_e = hbar = e = a0 = 1. Interface quantities carry
// unit suffixes and are converted here.

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

namespace vborn::units {

inline constexpr double kElectronMass = 1.0;
inline constexpr double kBohrRadiusNm = 0.0529177210903;
inline constexpr double kBohrPerNm = 1.0 / kBohrRadiusNm;  // 18.8973
inline constexpr double kHartreeEv = 27.211386245988;
inline constexpr double kDegree = std::numbers::pi / 180.0;

inline double kinetic_energy(double momentum) { return momentum * momentum / (2.0 * kElectronMass); }
inline double momentum_from_energy(double energy) { return std::sqrt(2.0 * kElectronMass * energy); }

enum class Dimension {
    dimensionless,
    length,          // a0, bohr, nm
    inverse_length,  // /a0, 1/a0, /nm, 1/nm, au
    angle,           // deg, rad
    energy,          // Ha, hartree, au, eV, keV
    coupling,        // energy x length (Yukawa V0): au
};

std::string_view dimension_name(Dimension d);

/// Parses "<number> [unit]" into atomic units (angles into radians). A bare
/// number is taken in atomic units (degrees for angles). Throws
/// std::invalid_argument naming the problem.
double parse_quantity(std::string_view text, Dimension dim);

}  // namespace vborn::units
