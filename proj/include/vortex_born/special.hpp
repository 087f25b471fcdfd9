#pragma once

#include <complex>
#include <optional>

#include "vortex_born/quadrature.hpp"

namespace vborn {

/// Integer-order Bessel function of the first kind, |m| <= 512.
/// Miller's backward recurrence normalised by J0 + 2 sum J_2k = 1;
/// absolute error below 1e-12 for |x| <= 1e3.
double bessel_j(int m, double x);

/// Modified Bessel function I0(x) for 0 <= x <= 700 (OverflowError above).
double bessel_i0(double x);

/// exp(-x) I0(x) for any x >= 0. Power series up to x = 30, asymptotic
/// expansion beyond.
double bessel_i0_scaled(double x);

/// Arguments of the azimuthal kernel
///   I_m = int dpsi/2pi exp(i m psi + i kb cos(psi + chi)) / (alpha - beta cos psi)^power.
struct KernelArgs {
    int power = 1;  // 1 or 2
    int m = 0;
    double alpha = 1.0;
    double beta = 0.0;
    double kb = 0.0;   // k_perp * b
    double chi = 0.0;  // phi - phi_b

    /// Throws DomainError unless power in {1,2}, alpha > beta >= 0, kb >= 0, all finite.
    void validate() const;
};

/// Closed forms, available when kb = 0 or beta = 0:
///   kb = 0:   power 1 -> r^|m| / s,  power 2 -> r^|m| (|m| s + alpha) / s^3,
///             with s = sqrt(alpha^2 - beta^2), r = beta / (alpha + s);
///   beta = 0: i^m exp(-i m chi) J_m(kb) / alpha^power.
/// Returns nullopt otherwise. Throws DomainError if alpha <= beta.
std::optional<std::complex<double>> kernel_im_closed(const KernelArgs& args);

/// Kernel value; closed form when available, otherwise periodic quadrature
/// with oscillation hint |m| + ceil(kb).
QuadratureResult kernel_im(const KernelArgs& args, const QuadratureBudget& budget = {});

/// (1 - d/dalpha) I_m, i.e. the power-1 plus power-2 kernels, evaluated in one
/// pass. `args.power` is ignored.
QuadratureResult kernel_im_hydrogenic(const KernelArgs& args, const QuadratureBudget& budget = {});

}  // namespace vborn
