#pragma once

// Elastic scattering of twisted electron wave-packets in the first Born
// approximation: amplitudes, event counts and cross sections for single,
// mesoscopic (Gaussian) and macroscopic targets.
//
// Kinematics: the outgoing momentum has |p_f| = sqrt(p_i^2 + kappa0^2) for
// every direction and every k_perp inside the packet, and
//   Q^2        = p_f^2 + p_i^2 - 2 p_f p_i cos(theta),
//   Q_perp     = p_f sin(theta),
//   (Q - k)^2  = Q^2 + k^2 - 2 k Q_perp cos(phi_k - phi).

#include <complex>
#include <variant>

#include "vortex_born/beams.hpp"
#include "vortex_born/potentials.hpp"
#include "vortex_born/quadrature.hpp"

namespace vborn {

struct Direction {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // taken modulo 2 pi

    void validate() const;
};

struct SinglePotential {
    double b = 0.0;
    double phi_b = 0.0;
};

/// Incoherent ensemble with Gaussian transverse density centred at
/// b0 (cos phi_b0, sin phi_b0) and width sigma_b.
struct MesoscopicGaussian {
    double b0 = 0.0;
    double phi_b0 = 0.0;
    double sigma_b = 1.0;
};

struct Macroscopic {};

using TargetSpec = std::variant<SinglePotential, MesoscopicGaussian, Macroscopic>;

void validate(const TargetSpec& target);

enum class Method {
    automatic,  // finite-width formula, closed-form inner integrals where they exist
    general,    // finite-width formula, all integrals by quadrature
    wide,       // wide-packet limit (k_perp -> kappa0), azimuthal quadrature
    closed,     // wide-packet limit in closed form
};

struct ComplexEstimate {
    std::complex<double> value{};
    Estimate diag;
};

/// |Q - k_perp|^2 for the outgoing direction and transverse momentum (k_perp, phi_k).
double q_squared(const BeamSpec& beam, const Direction& dir, double k_perp, double phi_k);

/// Twisted amplitude F(Q, b) for a single potential at impact parameter b:
///   F = (-i)^m e^{i m phi} scale / sqrt(2 pi) int dk g(k) sqrt(k) K(k),
/// with K the Yukawa kernel I_m or the hydrogen kernel (1 - d/dalpha) I_m.
ComplexEstimate amplitude_f_twisted(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                                    const Direction& dir, const QuadratureBudget& budget = {});

/// dnu/dOmega = (N_e / cos theta_k) |F(Q, b)|^2.
Estimate events_single(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                       const Direction& dir, const QuadratureBudget& budget = {});

/// Wide-packet events: L^(tw) |scale K(kappa0)|^2. The kernel uses its closed
/// form when b = 0 or theta = 0. kappa0 = 0 with m != 0 returns an exact,
/// flagged zero.
Estimate events_single_wide(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                            const Direction& dir, const QuadratureBudget& budget = {});

/// dsigma/dOmega(b) = (1 / L^(tw)) dnu/dOmega. `wide` selects events_single_wide.
Estimate cross_section_single(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                              const Direction& dir, const QuadratureBudget& budget = {}, bool wide = false);

/// Small-kappa0 factorisation: plane_wave_dcs(p_f, theta) * J_m(kappa0 b)^2.
double cross_section_single_factorized(const BeamSpec& beam, const PotentialSpec& pot,
                                       const SinglePotential& target, const Direction& dir);

/// Azimuthal mean of f^2 over psi for w = alpha - beta cos(psi), closed form.
double mean_f2_closed(const PotentialSpec& pot, double alpha, double beta);

/// Macroscopic Yukawa cross section, (2 m_e V0)^2 / cos(theta_k) * u / (u^2 - v^2)^{3/2}.
double yukawa_macroscopic_closed(const Yukawa& pot, double u, double v, double cos_theta_k);

/// Macroscopic hydrogen cross section: the operator
/// (-d/du + d^2/du^2 - (1/6) d^3/du^3) (u^2 - v^2)^{-1/2} expanded explicitly,
/// times a0^2 / (4 cos theta_k).
double hydrogen_macroscopic_closed(const Hydrogen1s& pot, double u, double v, double cos_theta_k);

/// Averaged cross section for an infinitely wide target. Independent of m
/// and of phi.
Estimate dcs_macroscopic(const BeamSpec& beam, const PotentialSpec& pot, const Direction& dir,
                         Method method = Method::closed, const QuadratureBudget& budget = {});

/// Sphere integral of dcs_macroscopic; equals sigma_pl(p_f) / cos(theta_k) in
/// the wide limit.
Estimate total_macroscopic(const BeamSpec& beam, const PotentialSpec& pot, Method method = Method::closed,
                           const QuadratureBudget& budget = {});

/// Azimuthal asymmetry A(theta; theta_k) of a two-state superposition
/// (wide packet, macroscopic target).
Estimate asymmetry_a(const SuperpositionSpec& sup, const PotentialSpec& pot, double theta,
                     const QuadratureBudget& budget = {});

/// dsigma^(2)/dOmega = dsigma/dOmega [1 + A cos(dm (phi - pi/2) + dalpha)].
Estimate dcs_superposition(const SuperpositionSpec& sup, const PotentialSpec& pot, const Direction& dir,
                           const QuadratureBudget& budget = {});

/// Sphere integral of dcs_superposition.
Estimate total_superposition(const SuperpositionSpec& sup, const PotentialSpec& pot,
                             const QuadratureBudget& budget = {});

/// Events on a Gaussian mesoscopic target: the four-fold (k, k', phi_k,
/// phi_k') integral with the Gaussian form factor. The raw complex sum is
/// returned; its imaginary part is a quadrature residue.
/// At most 2^24 integrand samples are spent; beyond that the partial result
/// is returned with converged = false.
ComplexEstimate events_mesoscopic_raw(const BeamSpec& beam, const PotentialSpec& pot,
                                      const MesoscopicGaussian& target, const Direction& dir,
                                      const QuadratureBudget& budget = {});

Estimate events_mesoscopic(const BeamSpec& beam, const PotentialSpec& pot, const MesoscopicGaussian& target,
                           const Direction& dir, const QuadratureBudget& budget = {});

/// Small-target ratio
///   R(b0) = int_0^inf J_m^2(kappa0 b) I0(b b0/sigma_b^2) exp(-(b^2 + b0^2)/(2 sigma_b^2)) b db / sigma_b^2,
/// evaluated with the exponentially scaled I0. Flags a regime warning unless
/// sigma_b * sigma_kappa <= 0.1.
Estimate ratio_r(const BeamSpec& beam, const MesoscopicGaussian& target, const QuadratureBudget& budget = {});

/// Large-target events:
///   (N_e / cos theta_k) int d^2k / (2 pi k) g^2 |f(Q - k)|^2 n(b_k),
///   b_k = (m / k)(sin phi_k, -cos phi_k).
/// Shape-only observable. Flags a regime warning unless sigma_b * sigma_kappa >= 10.
Estimate events_large_target(const BeamSpec& beam, const PotentialSpec& pot, const MesoscopicGaussian& target,
                             const Direction& dir, const QuadratureBudget& budget = {});

}  // namespace vborn
