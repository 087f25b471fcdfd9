#include <cmath>
#include <numbers>
#include <sstream>

#include "vortex_born/scenario.hpp"
#include "vortex_born/special.hpp"

namespace vborn {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string describe(double measured, double expected, double rel) {
    std::ostringstream s;
    s.precision(10);
    s << "got " << measured << ", expected " << expected << " (rel " << rel << ")";
    return s.str();
}

CheckResult compare(std::string name, double measured, double expected, double tol) {
    const double rel = rel_diff(measured, expected);
    return {std::move(name), rel <= tol, describe(measured, expected, rel)};
}

// Worst relative deviation over a list of (measured, expected) pairs.
struct Worst {
    double rel = 0.0;
    double measured = 0.0;
    double expected = 0.0;

    void add(double m, double e) {
        const double r = rel_diff(m, e);
        if (r >= rel) *this = {r, m, e};
    }
    CheckResult result(std::string name, double tol) const {
        return {std::move(name), rel <= tol, "worst case " + describe(measured, expected, rel)};
    }
};

BeamSpec central_beam(int m) { return BeamSpec::from_opening_angle(10.0 * kDeg, 10.0, 10.0 * std::tan(10.0 * kDeg) / 5.0, m); }

}  // namespace

std::vector<CheckResult> selfcheck(const SelfcheckHooks& hooks) {
    std::vector<CheckResult> out;
    const QuadratureBudget tight{1e-10, 1e-16, std::int64_t{1} << 20};
    const Hydrogen1s hydrogen{1.0};
    const Yukawa yukawa{1.0, 1.0};

    {
        Worst w;
        const QuadratureBudget relative{1e-12, 1e-300, std::int64_t{1} << 20};
        for (const int m : {0, 1, 2, 5})
            for (const double beta : {0.5, 0.9, 1.9}) {
                KernelArgs args{1, m, 2.0, beta, 0.0, 0.0};
                const auto closed = kernel_im_closed(args)->real();
                const auto quad = integrate_periodic(
                    [&](double psi) { return std::polar(1.0, m * psi) / (args.alpha - beta * std::cos(psi)); }, m,
                    relative);
                w.add(quad.value.real(), closed);
            }
        out.push_back(w.result("kernel closed form vs quadrature", 1e-10));
    }

    {
        // Power series of J_m, fine for small arguments.
        Worst w;
        for (const int m : {0, 1, 3, 7})
            for (const double x : {0.3, 2.0, 5.5}) {
                double term = std::pow(0.5 * x, m) / std::tgamma(m + 1.0), sum = term;
                for (int k = 1; k < 60; ++k) {
                    term *= -(0.25 * x * x) / (double(k) * double(k + m));
                    sum += term;
                }
                w.add(bessel_j(m, x), sum);
            }
        out.push_back(w.result("bessel_j vs power series", 1e-11));
    }

    {
        Worst w;
        for (const double ratio : {10.0, 3.0, 1.0}) {
            const BeamSpec beam(BeamParams{ratio, 1.0, 10.0, 0});
            const auto q = integrate_halfline([&](double k) { return weight(beam, k) * weight(beam, k); }, beam.kappa0(),
                                              beam.sigma_kappa(), tight);
            w.add(q.value.real(), 1.0);
        }
        out.push_back(w.result("beam weight normalisation", 1e-9));
    }

    {
        const BeamSpec beam = central_beam(0).with_n_electrons(3.0);
        const double lum = luminosity(beam, tight).value;
        const double rho = density(beam, 0.0, tight).value;
        out.push_back(compare("luminosity equals on-axis density / cos(theta_k)", lum,
                              beam.n_electrons() / std::cos(beam.theta_k()) * rho, 1e-8));
    }

    out.push_back(compare("Yukawa plane-wave total vs analytic", plane_wave_total(yukawa, 10.0, tight).value,
                          yukawa_total_analytic(yukawa, 10.0), 1e-8));

    {
        Worst w;
        for (const double tk : {15.0, 30.0}) {
            const auto beam = BeamSpec::from_opening_angle(tk * kDeg, 10.0, 0.01 * 10.0 * std::tan(tk * kDeg));
            const double total = total_macroscopic(beam, hydrogen, Method::closed, tight).value;
            w.add(total * std::cos(beam.theta_k()), plane_wave_total(hydrogen, beam.p_f(), tight).value);
        }
        out.push_back(w.result("macroscopic total * cos(theta_k) = plane-wave total", 1e-3));
    }

    auto closed_vs_wide = [&](const PotentialSpec& pot, double scale) {
        Worst w;
        for (const double tk : {10.0, 20.0, 30.0})
            for (const double theta : {0.0, 5.0, 15.0, 45.0, 120.0}) {
                const auto beam = BeamSpec::from_opening_angle(tk * kDeg, 10.0, 0.01 * 10.0 * std::tan(tk * kDeg));
                const Direction dir{theta * kDeg, 0.0};
                w.add(scale * dcs_macroscopic(beam, pot, dir, Method::closed, tight).value,
                      dcs_macroscopic(beam, pot, dir, Method::wide, tight).value);
            }
        return w;
    };
    out.push_back(closed_vs_wide(yukawa, hooks.yukawa_closed_scale).result("Yukawa macroscopic closed form vs quadrature", 1e-8));
    out.push_back(closed_vs_wide(hydrogen, 1.0).result("hydrogen macroscopic closed form vs quadrature", 1e-8));

    for (const int m : {1, 2}) {
        const auto beam = central_beam(m);
        std::vector<double> x, y;
        for (int i = 0; i < 8; ++i) {
            const double theta = 0.1 * kDeg * std::pow(10.0, i / 7.0);
            x.push_back(std::log(std::sin(theta)));
            y.push_back(std::log(events_single(beam, hydrogen, {0.0, 0.0}, {theta, 0.0}, tight).value));
        }
        out.push_back(compare("forward dip slope, m = " + std::to_string(m), fit_slope(x, y), 2.0 * m, 0.03));
    }

    for (const int m : {1, 2}) {
        const auto beam = central_beam(m);
        std::vector<double> x, y;
        for (int i = 0; i < 8; ++i) {
            const double b = 1e-3 * std::pow(10.0, i / 7.0);
            x.push_back(std::log(b));
            y.push_back(std::log(events_single(beam, hydrogen, {b, 0.0}, {0.0, 0.0}, tight).value));
        }
        out.push_back(compare("small-b slope, m = " + std::to_string(m), fit_slope(x, y), 2.0 * m, 0.03));
    }

    {
        const auto beam = BeamSpec::from_opening_angle(20.0 * kDeg, 10.0, 0.01 * 10.0 * std::tan(20.0 * kDeg));
        const SuperpositionSpec sup{beam, 0, 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0.0, 0.7};
        out.push_back(compare("superposition total = plane-wave total / cos(theta_k)",
                              total_superposition(sup, hydrogen, tight).value,
                              plane_wave_total(hydrogen, beam.p_f(), tight).value / std::cos(beam.theta_k()), 1e-3));
    }

    {
        Worst w;
        const BeamSpec beam(BeamParams{1e-9, 1e-10, 10.0, 0});
        for (const double b0 : {0.0, 1.0, 10.0, 100.0}) w.add(ratio_r(beam, {b0, 0.0, 1.0}, tight).value, 1.0);
        out.push_back(w.result("ratio_r -> 1 for kappa0 -> 0, m = 0", 1e-6));
    }

    {
        Worst w;
        const QuadratureBudget budget{1e-10, 1e-18, std::int64_t{1} << 20};
        for (const int m : {1, 2})
            for (const double phi : {0.3, 2.0}) {
                const double a = events_single(central_beam(m), hydrogen, {1.0, 0.4}, {12.0 * kDeg, phi}, budget).value;
                const double b =
                    events_single(central_beam(-m), hydrogen, {1.0, -0.4}, {12.0 * kDeg, -phi}, budget).value;
                w.add(b, a);
            }
        out.push_back(w.result("mirror symmetry m -> -m, phi -> -phi", 1e-8));
    }

    return out;
}

}  // namespace vborn
