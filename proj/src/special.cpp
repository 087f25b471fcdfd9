#include "vortex_born/special.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace vborn {

double bessel_j(int m, double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j: argument must be finite");
    const int order = std::abs(m);
    if (order > 512) throw DomainError("bessel_j: |m| must be <= 512");

    double sign = 1.0;
    if (m < 0 && (order & 1)) sign = -sign;
    if (x < 0.0) {
        x = -x;
        if (order & 1) sign = -sign;
    }
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;

    const int reach = std::max(order, static_cast<int>(x)) + 1;
    const int start = 2 * ((reach + 32 + static_cast<int>(std::sqrt(60.0 * reach))) / 2);

    constexpr double big = 1e250;
    constexpr double small = 1e-250;
    double upper = 0.0;  // J_{k+1}, unnormalised
    double current = 1.0;  // J_k
    double result = (start == order) ? current : 0.0;
    double norm = 2.0 * current;  // start is even and > 0
    for (int k = start; k >= 1; --k) {
        const double lower = (2.0 * k / x) * current - upper;
        upper = current;
        current = lower;
        const int index = k - 1;
        if (index == order) result = current;
        if ((index & 1) == 0) norm += (index == 0) ? current : 2.0 * current;
        if (std::abs(current) > big) {
            current *= small;
            upper *= small;
            result *= small;
            norm *= small;
        }
    }
    return sign * result / norm;
}

double bessel_i0_scaled(double x) {
    if (!(x >= 0.0)) throw DomainError("bessel_i0: argument must be >= 0");
    if (!std::isfinite(x)) throw DomainError("bessel_i0: argument must be finite");
    if (x <= 30.0) {
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (double(k) * double(k));
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return sum * std::exp(-x);
    }
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if (next > term) break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double bessel_i0(double x) {
    if (x > 700.0) throw OverflowError("bessel_i0: argument above 700 overflows");
    return bessel_i0_scaled(x) * std::exp(x);
}

void KernelArgs::validate() const {
    if (power != 1 && power != 2) throw DomainError("kernel: power must be 1 or 2");
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(kb) || !std::isfinite(chi)) {
        throw DomainError("kernel: arguments must be finite");
    }
    if (!(beta >= 0.0)) throw DomainError("kernel: beta must be >= 0");
    if (!(alpha > beta)) throw DomainError("kernel: alpha must exceed beta");
    if (!(kb >= 0.0)) throw DomainError("kernel: kb must be >= 0");
}

namespace {

std::complex<double> forward_phase(int m, double chi) {
    // i^m exp(-i m chi)
    return std::polar(1.0, m * (0.5 * std::numbers::pi - chi));
}

int oscillation_hint(const KernelArgs& args) {
    return std::abs(args.m) + static_cast<int>(std::ceil(args.kb));
}

// Trapezoid sums of an oscillating integrand cannot resolve a result much
// smaller than eps times its mean modulus; the absolute tolerance is floored
// there so that near-cancelling kernels still report convergence.
QuadratureBudget with_noise_floor(const QuadratureBudget& budget, const KernelArgs& args, bool hydrogenic) {
    const double s = std::sqrt((args.alpha - args.beta) * (args.alpha + args.beta));
    const double mean_first = 1.0 / s;
    const double mean_second = args.alpha / (s * s * s);
    const double mean = hydrogenic ? mean_first + mean_second : (args.power == 1 ? mean_first : mean_second);
    QuadratureBudget out = budget;
    out.abs_tol = std::max(budget.abs_tol, 1e-14 * mean);
    return out;
}

}  // namespace

std::optional<std::complex<double>> kernel_im_closed(const KernelArgs& args) {
    args.validate();
    const int order = std::abs(args.m);
    if (args.kb == 0.0) {
        const double s = std::sqrt((args.alpha - args.beta) * (args.alpha + args.beta));
        const double r = args.beta / (args.alpha + s);
        const double rm = order == 0 ? 1.0 : std::pow(r, order);
        if (args.power == 1) return std::complex<double>(rm / s, 0.0);
        return std::complex<double>(rm * (order * s + args.alpha) / (s * s * s), 0.0);
    }
    if (args.beta == 0.0) {
        return forward_phase(args.m, args.chi) * bessel_j(args.m, args.kb) / std::pow(args.alpha, args.power);
    }
    return std::nullopt;
}

QuadratureResult kernel_im(const KernelArgs& args, const QuadratureBudget& budget) {
    if (auto closed = kernel_im_closed(args)) return {*closed, 0.0, 0, true};
    const double m = args.m;
    auto integrand = [&](double psi) {
        const double w = args.alpha - args.beta * std::cos(psi);
        const double denom = args.power == 1 ? w : w * w;
        return std::polar(1.0 / denom, m * psi + args.kb * std::cos(psi + args.chi));
    };
    return integrate_periodic(integrand, oscillation_hint(args), with_noise_floor(budget, args, false));
}

QuadratureResult kernel_im_hydrogenic(const KernelArgs& args, const QuadratureBudget& budget) {
    KernelArgs first = args;
    first.power = 1;
    KernelArgs second = args;
    second.power = 2;
    const auto closed_first = kernel_im_closed(first);
    if (closed_first) return {*closed_first + *kernel_im_closed(second), 0.0, 0, true};
    const double m = args.m;
    auto integrand = [&](double psi) {
        const double inv = 1.0 / (args.alpha - args.beta * std::cos(psi));
        return std::polar(inv + inv * inv, m * psi + args.kb * std::cos(psi + args.chi));
    };
    return integrate_periodic(integrand, oscillation_hint(args), with_noise_floor(budget, args, true));
}

}  // namespace vborn
