#pragma once

// Bessel wave-packet of a twisted electron: Gaussian transverse-momentum
// weight, radial profile, transverse density and collision luminosity.

#include "vortex_born/quadrature.hpp"

namespace vborn {

struct BeamParams {
    double kappa0 = 0.0;       // mean transverse momentum
    double sigma_kappa = 1.0;  // transverse momentum width
    double p_i = 1.0;          // mean longitudinal momentum
    int m = 0;                 // OAM projection
    double n_electrons = 1.0;
    double sigma_z = 1e3;  // longitudinal packet size, validity check only
    double a_field = 1.0;  // potential radius, validity check only
};

/// Immutable beam description. The weight normalisation constant is computed
/// once at construction.
class BeamSpec {
public:
    explicit BeamSpec(const BeamParams& params);

    /// Beam with kappa0 = p_i tan(theta_k).
    static BeamSpec from_opening_angle(double theta_k, double p_i, double sigma_kappa, int m = 0);

    const BeamParams& params() const noexcept { return params_; }
    double kappa0() const noexcept { return params_.kappa0; }
    double sigma_kappa() const noexcept { return params_.sigma_kappa; }
    double p_i() const noexcept { return params_.p_i; }
    int m() const noexcept { return params_.m; }
    double n_electrons() const noexcept { return params_.n_electrons; }

    /// Opening angle, tan(theta_k) = kappa0 / p_i.
    double theta_k() const noexcept;
    /// |p_f| = sqrt(p_i^2 + kappa0^2), fixed for all outgoing directions.
    double p_f() const noexcept;
    /// C such that int_0^inf g(kappa)^2 dkappa = 1.
    double norm() const noexcept { return norm_; }

    BeamSpec with_m(int m) const;
    BeamSpec with_n_electrons(double n) const;

private:
    BeamParams params_;
    double norm_;
};

/// g(kappa) = C exp(-(kappa - kappa0)^2 / (2 sigma^2)). DomainError for kappa < 0.
double weight(const BeamSpec& beam, double kappa);

/// R^(m)(r) = int_0^inf sqrt(kappa) J_m(kappa r) g(kappa) dkappa.
Estimate radial_profile(const BeamSpec& beam, double r_perp, const QuadratureBudget& budget = {});

/// rho^(m)(r) = R^(m)(r)^2 / (2 pi).
Estimate density(const BeamSpec& beam, double r_perp, const QuadratureBudget& budget = {});

/// L = (N_e / cos theta_k) |int g(k) sqrt(k / 2pi) dk|^2.
Estimate luminosity(const BeamSpec& beam, const QuadratureBudget& budget = {});

enum class Verdict { pass, warn };

struct ValidityReport {
    Verdict potential_vs_packet = Verdict::pass;  // a << sigma_z
    Verdict packet_vs_spread = Verdict::pass;     // sigma_z << p_i / (kappa0 sigma_kappa)
    double packet_over_potential = 0.0;
    double spread_over_packet = 0.0;

    bool all_pass() const { return potential_vs_packet == Verdict::pass && packet_vs_spread == Verdict::pass; }
};

/// Checks a << sigma_z << p_i / (kappa0 sigma_kappa), reading "<<" as a
/// factor of at least 10. Advisory only.
ValidityReport check_validity(const BeamSpec& beam);

/// Coherent superposition c1 |m1> + c2 |m2> sharing the kinematics of `base`.
struct SuperpositionSpec {
    BeamSpec base;
    int m1 = 0;
    int m2 = 0;
    double c1_abs = 1.0;
    double c2_abs = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;

    /// DomainError unless |c1|^2 + |c2|^2 = 1 within 1e-12 and both are >= 0.
    void validate() const;
    int delta_m() const { return m2 - m1; }
    double delta_alpha() const { return alpha2 - alpha1; }
};

}  // namespace vborn
