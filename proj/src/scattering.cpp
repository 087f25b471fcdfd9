#include "vortex_born/scattering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "vortex_born/special.hpp"

namespace vborn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Transfer {
    double q2;      // |Q|^2
    double q_perp;  // |Q_perp|
};

Transfer transfer(const BeamSpec& beam, const Direction& dir) {
    const double pf = beam.p_f();
    const double pi = beam.p_i();
    // (p_f - p_i)^2 + 4 p_f p_i sin^2(theta/2), free of cancellation near theta = 0.
    const double dp = beam.kappa0() * beam.kappa0() / (pf + pi);
    const double s = std::sin(0.5 * dir.theta);
    return {dp * dp + 4.0 * pf * pi * s * s, pf * std::sin(dir.theta)};
}

// w = alpha - beta cos(psi) for the potential's denominator at transverse momentum k.
struct Denominator {
    double alpha;
    double beta;
};

Denominator denominator_at(const BornDenominator& form, const Transfer& tr, double k) {
    return {form.offset + form.slope * (tr.q2 + k * k), 2.0 * form.slope * k * tr.q_perp};
}

double amplitude_of_w(const BornDenominator& form, double w) {
    const double inv = 1.0 / w;
    return form.max_power == 1 ? form.scale * inv : form.scale * (inv + inv * inv);
}

QuadratureResult potential_kernel(const BornDenominator& form, int m, const Denominator& d, double kb, double chi,
                                  const QuadratureBudget& budget) {
    const KernelArgs args{1, m, d.alpha, d.beta, kb, chi};
    return form.max_power == 1 ? kernel_im(args, budget) : kernel_im_hydrogenic(args, budget);
}

QuadratureBudget inner_budget(const QuadratureBudget& budget) {
    QuadratureBudget inner = budget;
    inner.rel_tol = std::max(0.1 * budget.rel_tol, 1e-14);
    inner.abs_tol = std::min(budget.abs_tol, 1e-16);
    return inner;
}

// Wide-packet formulas assume sigma_kappa <= kappa0 / 10. kappa0 = 0 is the
// plane-wave limit, where they are exact for m = 0.
bool outside_wide_regime(const BeamSpec& beam) {
    return beam.kappa0() > 0.0 && beam.sigma_kappa() > 0.1 * beam.kappa0();
}

void check_single(const SinglePotential& t) {
    if (!(t.b >= 0.0) || !std::isfinite(t.b)) throw DomainError("single potential: b must be >= 0");
    if (!std::isfinite(t.phi_b)) throw DomainError("single potential: phi_b must be finite");
}

void check_mesoscopic(const MesoscopicGaussian& t) {
    if (!(t.b0 >= 0.0) || !std::isfinite(t.b0)) throw DomainError("mesoscopic target: b0 must be >= 0");
    if (!(t.sigma_b > 0.0) || !std::isfinite(t.sigma_b)) throw DomainError("mesoscopic target: sigma_b must be > 0");
    if (!std::isfinite(t.phi_b0)) throw DomainError("mesoscopic target: phi_b0 must be finite");
}

Estimate scaled(const ComplexEstimate& amp, double factor) {
    Estimate out = amp.diag;
    const double mag = std::abs(amp.value);
    out.value = factor * mag * mag;
    out.est_error = factor * (2.0 * mag * amp.diag.est_error + amp.diag.est_error * amp.diag.est_error);
    return out;
}

}  // namespace

void Direction::validate() const {
    if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("direction: theta must lie in [0, pi]");
    if (!std::isfinite(phi)) throw DomainError("direction: phi must be finite");
}

void validate(const TargetSpec& target) {
    std::visit(overloaded{
                   [](const SinglePotential& t) { check_single(t); },
                   [](const MesoscopicGaussian& t) { check_mesoscopic(t); },
                   [](const Macroscopic&) {},
               },
               target);
}

double q_squared(const BeamSpec& beam, const Direction& dir, double k_perp, double phi_k) {
    dir.validate();
    if (!(k_perp >= 0.0)) throw DomainError("q_squared: k_perp must be >= 0");
    const Transfer tr = transfer(beam, dir);
    const double q2 = tr.q2 + k_perp * k_perp - 2.0 * k_perp * tr.q_perp * std::cos(phi_k - dir.phi);
    return std::max(q2, 0.0);
}

ComplexEstimate amplitude_f_twisted(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                                    const Direction& dir, const QuadratureBudget& budget) {
    dir.validate();
    check_single(target);
    const auto form = denominator_form(pot);
    const Transfer tr = transfer(beam, dir);
    const double chi = dir.phi - target.phi_b;
    const auto inner = inner_budget(budget);

    ComplexEstimate out;
    auto integrand = [&](double k) -> std::complex<double> {
        if (k <= 0.0) return {};
        const auto kernel = potential_kernel(form, beam.m(), denominator_at(form, tr, k), k * target.b, chi, inner);
        out.diag.absorb(kernel);
        return weight(beam, k) * std::sqrt(k) * kernel.value;
    };
    const auto q = integrate_halfline(integrand, beam.kappa0(), beam.sigma_kappa(), budget);
    out.diag.absorb(q);

    // (-i)^m e^{i m phi} scale / sqrt(2 pi)
    const std::complex<double> prefactor =
        std::polar(1.0, beam.m() * (dir.phi - 0.5 * kPi)) * (form.scale / std::sqrt(kTwoPi));
    out.value = prefactor * q.value;
    out.diag.est_error = std::abs(prefactor) * q.est_error;
    return out;
}

Estimate events_single(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                       const Direction& dir, const QuadratureBudget& budget) {
    const auto amp = amplitude_f_twisted(beam, pot, target, dir, budget);
    return scaled(amp, beam.n_electrons() / std::cos(beam.theta_k()));
}

Estimate events_single_wide(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                            const Direction& dir, const QuadratureBudget& budget) {
    dir.validate();
    check_single(target);
    const auto form = denominator_form(pot);
    Estimate lum = luminosity(beam, budget);
    if (beam.kappa0() == 0.0 && beam.m() != 0) {
        Estimate zero;
        zero.absorb(lum);
        zero.degenerate = true;
        return zero;
    }
    const Transfer tr = transfer(beam, dir);
    const double k = beam.kappa0();
    const auto kernel = potential_kernel(form, beam.m(), denominator_at(form, tr, k), k * target.b,
                                         dir.phi - target.phi_b, inner_budget(budget));
    ComplexEstimate amp;
    amp.value = form.scale * kernel.value;
    amp.diag.absorb(kernel);
    amp.diag.est_error = std::abs(form.scale) * kernel.est_error;
    Estimate out = scaled(amp, lum.value);
    out.absorb(lum);
    out.est_error += lum.est_error * std::norm(amp.value);
    out.regime_warning = outside_wide_regime(beam);
    return out;
}

Estimate cross_section_single(const BeamSpec& beam, const PotentialSpec& pot, const SinglePotential& target,
                              const Direction& dir, const QuadratureBudget& budget, bool wide) {
    Estimate events = wide ? events_single_wide(beam, pot, target, dir, budget)
                           : events_single(beam, pot, target, dir, budget);
    const Estimate lum = luminosity(beam, budget);
    events.value /= lum.value;
    events.est_error /= lum.value;
    return events.absorb(lum);
}

double cross_section_single_factorized(const BeamSpec& beam, const PotentialSpec& pot,
                                       const SinglePotential& target, const Direction& dir) {
    dir.validate();
    check_single(target);
    const double j = bessel_j(beam.m(), beam.kappa0() * target.b);
    return plane_wave_dcs(pot, beam.p_f(), dir.theta) * j * j;
}

double yukawa_macroscopic_closed(const Yukawa& pot, double u, double v, double cos_theta_k) {
    const double coupling = 2.0 * pot.v0;  // 2 m_e V0, m_e = 1
    const double d = (u - v) * (u + v);
    return coupling * coupling / cos_theta_k * u / (d * std::sqrt(d));
}

double hydrogen_macroscopic_closed(const Hydrogen1s& pot, double u, double v, double cos_theta_k) {
    // S = D^{-1/2}, D = u^2 - v^2:
    //   -S'       = u D^{-3/2}
    //   S''       = (2u^2 + v^2) D^{-5/2}
    //   -S'''/6   = u (2u^2 + 3v^2) / 2 * D^{-7/2}
    const double u2 = u * u;
    const double v2 = v * v;
    const double d = (u - v) * (u + v);
    const double inv_sqrt_d = 1.0 / std::sqrt(d);
    const double inv_d = 1.0 / d;
    const double p3 = inv_sqrt_d * inv_d;
    const double p5 = p3 * inv_d;
    const double p7 = p5 * inv_d;
    const double bracket = u * p3 + (2.0 * u2 + v2) * p5 + 0.5 * u * (2.0 * u2 + 3.0 * v2) * p7;
    return 0.25 * pot.a0 * pot.a0 / cos_theta_k * bracket;
}

double mean_f2_closed(const PotentialSpec& pot, double alpha, double beta) {
    if (!(alpha > beta) || !(beta >= 0.0)) throw DomainError("mean_f2_closed: need alpha > beta >= 0");
    return std::visit(overloaded{
                          [&](const Yukawa& y) { return yukawa_macroscopic_closed(y, alpha, beta, 1.0); },
                          [&](const Hydrogen1s& h) { return hydrogen_macroscopic_closed(h, alpha, beta, 1.0); },
                      },
                      pot);
}

namespace {

QuadratureResult mean_f2_quadrature(const BornDenominator& form, const Denominator& d, const QuadratureBudget& budget) {
    return integrate_periodic(
        [&](double psi) {
            const double f = amplitude_of_w(form, d.alpha - d.beta * std::cos(psi));
            return f * f;
        },
        0, budget);
}

}  // namespace

Estimate dcs_macroscopic(const BeamSpec& beam, const PotentialSpec& pot, const Direction& dir, Method method,
                         const QuadratureBudget& budget) {
    dir.validate();
    const auto form = denominator_form(pot);
    const Transfer tr = transfer(beam, dir);
    const double inv_cos = 1.0 / std::cos(beam.theta_k());
    Estimate out;

    switch (method) {
    case Method::closed: {
        const auto d = denominator_at(form, tr, beam.kappa0());
        out.value = inv_cos * mean_f2_closed(pot, d.alpha, d.beta);
        out.regime_warning = outside_wide_regime(beam);
        return out;
    }
    case Method::wide: {
        const auto q = mean_f2_quadrature(form, denominator_at(form, tr, beam.kappa0()), budget);
        out.value = inv_cos * q.value.real();
        out.est_error = inv_cos * q.est_error;
        out.absorb(q);
        out.regime_warning = outside_wide_regime(beam);
        return out;
    }
    case Method::general:
    case Method::automatic: {
        const bool closed_inner = method == Method::automatic;
        const auto inner = inner_budget(budget);
        auto integrand = [&](double k) {
            const auto d = denominator_at(form, tr, k);
            const double g = weight(beam, k);
            if (closed_inner) return g * g * mean_f2_closed(pot, d.alpha, d.beta);
            const auto q = mean_f2_quadrature(form, d, inner);
            out.absorb(q);
            return g * g * q.value.real();
        };
        const auto q = integrate_halfline(integrand, beam.kappa0(), beam.sigma_kappa(), budget);
        out.value = inv_cos * q.value.real();
        out.est_error = inv_cos * q.est_error;
        out.absorb(q);
        return out;
    }
    }
    return out;
}

Estimate total_macroscopic(const BeamSpec& beam, const PotentialSpec& pot, Method method,
                           const QuadratureBudget& budget) {
    Estimate inner;
    auto ring = [&](double x, Estimate&) {
        const double theta = std::acos(std::clamp(x, -1.0, 1.0));
        const auto d = dcs_macroscopic(beam, pot, Direction{theta, 0.0}, method, budget);
        inner.absorb(d);
        return kTwoPi * d.value;
    };
    Estimate out = integrate_adaptive(ring, -1.0, 1.0, budget);
    return out.absorb(inner);
}

namespace {

struct Moments {
    double mean = 0.0;      // <f^2>
    double mean_cos = 0.0;  // <f^2 cos(dm psi)>
    Estimate diag;
};

Moments superposition_moments(const SuperpositionSpec& sup, const PotentialSpec& pot, double theta,
                              const QuadratureBudget& budget) {
    sup.validate();
    const Direction dir{theta, 0.0};
    dir.validate();
    const BeamSpec& beam = sup.base;
    const auto form = denominator_form(pot);
    const auto d = denominator_at(form, transfer(beam, dir), beam.kappa0());
    const int dm = sup.delta_m();

    Moments out;
    const auto mean = mean_f2_quadrature(form, d, budget);
    out.mean = mean.value.real();
    out.diag.absorb(mean);
    if (sup.c1_abs * sup.c2_abs == 0.0) return out;
    const auto harmonic = integrate_periodic(
        [&](double psi) {
            const double f = amplitude_of_w(form, d.alpha - d.beta * std::cos(psi));
            return f * f * std::cos(dm * psi);
        },
        std::abs(dm), budget);
    out.mean_cos = harmonic.value.real();
    out.diag.absorb(harmonic);
    out.diag.regime_warning = outside_wide_regime(beam);
    return out;
}

double asymmetry_from(const SuperpositionSpec& sup, const Moments& mom) {
    return 2.0 * sup.c1_abs * sup.c2_abs * mom.mean_cos / mom.mean;
}

double modulation(const SuperpositionSpec& sup, double a, double phi) {
    return 1.0 + a * std::cos(sup.delta_m() * (phi - 0.5 * kPi) + sup.delta_alpha());
}

}  // namespace

Estimate asymmetry_a(const SuperpositionSpec& sup, const PotentialSpec& pot, double theta,
                     const QuadratureBudget& budget) {
    const Moments mom = superposition_moments(sup, pot, theta, budget);
    Estimate out = mom.diag;
    out.value = asymmetry_from(sup, mom);
    return out;
}

Estimate dcs_superposition(const SuperpositionSpec& sup, const PotentialSpec& pot, const Direction& dir,
                           const QuadratureBudget& budget) {
    dir.validate();
    const Moments mom = superposition_moments(sup, pot, dir.theta, budget);
    Estimate out = mom.diag;
    const double dcs = mom.mean / std::cos(sup.base.theta_k());
    out.value = dcs * modulation(sup, asymmetry_from(sup, mom), dir.phi);
    return out;
}

Estimate total_superposition(const SuperpositionSpec& sup, const PotentialSpec& pot, const QuadratureBudget& budget) {
    Estimate inner;
    const double inv_cos = 1.0 / std::cos(sup.base.theta_k());
    auto ring = [&](double x, Estimate&) {
        const double theta = std::acos(std::clamp(x, -1.0, 1.0));
        const Moments mom = superposition_moments(sup, pot, theta, budget);
        inner.absorb(mom.diag);
        const double a = asymmetry_from(sup, mom);
        const auto azimuth =
            integrate_periodic([&](double phi) { return modulation(sup, a, phi); }, std::abs(sup.delta_m()), budget);
        inner.absorb(azimuth);
        return kTwoPi * mom.mean * inv_cos * azimuth.value.real();
    };
    Estimate out = integrate_adaptive(ring, -1.0, 1.0, budget);
    return out.absorb(inner);
}

ComplexEstimate events_mesoscopic_raw(const BeamSpec& beam, const PotentialSpec& pot,
                                      const MesoscopicGaussian& target, const Direction& dir,
                                      const QuadratureBudget& budget) {
    dir.validate();
    check_mesoscopic(target);
    budget.validate();
    const auto form = denominator_form(pot);
    const Transfer tr = transfer(beam, dir);
    const int m = beam.m();
    const double sb2 = target.sigma_b * target.sigma_b;
    const double k_max = beam.kappa0() + kHalflineSigmas * beam.sigma_kappa();
    constexpr std::int64_t kSampleCap = std::int64_t{1} << 24;

    const int hint = std::abs(m) + static_cast<int>(std::ceil(k_max * target.b0)) +
                     static_cast<int>(std::ceil(target.sigma_b * k_max));
    const std::int64_t start_n = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(std::max(64, 8 * hint))));

    auto samples = [](int order, std::int64_t n) {
        const std::int64_t k = std::int64_t{kHalflinePanels} * order;
        return k * n + k * (k + 1) / 2 * n;
    };

    std::int64_t spent = 0;
    auto evaluate = [&](int order, std::int64_t n) {
        const auto nodes = halfline_rule(beam.kappa0(), beam.sigma_kappa(), order);
        const std::size_t count = nodes.size();
        std::vector<std::vector<std::complex<double>>> a(count, std::vector<std::complex<double>>(n));
        std::vector<double> cos_table(n);
        for (std::int64_t j = 0; j < n; ++j) cos_table[j] = std::cos(kTwoPi * double(j) / double(n));

        for (std::size_t i = 0; i < count; ++i) {
            const double k = nodes[i].x;
            const double c = k > 0.0 ? nodes[i].w * weight(beam, k) * std::sqrt(k) : 0.0;
            const auto d = denominator_at(form, tr, k);
            for (std::int64_t j = 0; j < n; ++j) {
                const double phi = kTwoPi * double(j) / double(n);
                const double f = amplitude_of_w(form, d.alpha - d.beta * std::cos(phi - dir.phi));
                a[i][j] = std::polar(1.0, m * phi + k * target.b0 * std::cos(phi - target.phi_b0)) * (c * f);
            }
        }

        std::complex<double> total{};
        std::vector<double> kernel(n);
        std::vector<std::complex<double>> folded(n);
        for (std::size_t i = 0; i < count; ++i) {
            const double ki = nodes[i].x;
            for (std::size_t ip = i; ip < count; ++ip) {
                const double kp = nodes[ip].x;
                const double base = -0.5 * sb2 * (ki - kp) * (ki - kp);
                const double z = sb2 * ki * kp;
                // exp(-sigma_b^2 |k - k'|^2 / 2) as a function of phi - phi'.
                for (std::int64_t dd = 0; dd < n; ++dd) kernel[dd] = std::exp(base + z * (cos_table[dd] - 1.0));
                const auto& ai = a[i];
                const auto& ap = a[ip];
                // folded[j] = sum_j' conj(a'(j')) E(j - j')
                for (std::int64_t j = 0; j < n; ++j) {
                    std::complex<double> acc{};
                    for (std::int64_t jp = 0; jp <= j; ++jp) acc += std::conj(ap[jp]) * kernel[j - jp];
                    for (std::int64_t jp = j + 1; jp < n; ++jp) acc += std::conj(ap[jp]) * kernel[j - jp + n];
                    folded[j] = acc;
                }
                std::complex<double> t{};
                for (std::int64_t j = 0; j < n; ++j) t += ai[j] * folded[j];
                total += (ip == i) ? t : t + std::conj(t);
            }
        }
        spent += samples(order, n);
        const double prefactor = beam.n_electrons() / (std::cos(beam.theta_k()) * kTwoPi * double(n) * double(n));
        return total * prefactor;
    };

    ComplexEstimate out;
    auto close = [&](std::complex<double> a, std::complex<double> b) {
        return std::abs(a - b) <= budget.tolerance_for(std::abs(b));
    };
    auto affordable = [&](int order, std::int64_t n) { return spent + samples(order, n) <= kSampleCap; };

    int order = 8;
    std::int64_t n = start_n;
    if (!affordable(order, n)) {
        out.diag.converged = false;
        return out;
    }
    std::complex<double> value = evaluate(order, n);
    double err = std::abs(value);
    bool ok = false;
    while (affordable(order, 2 * n)) {
        const auto refined = evaluate(order, 2 * n);
        err = std::abs(refined - value);
        const bool agreed = close(value, refined);
        value = refined;
        n *= 2;
        if (agreed) {
            ok = true;
            break;
        }
    }
    if (ok) {
        ok = false;
        while (order < 1024 && affordable(2 * order, n)) {
            const auto refined = evaluate(2 * order, n);
            err = std::abs(refined - value);
            const bool agreed = close(value, refined);
            value = refined;
            order *= 2;
            if (agreed) {
                ok = true;
                break;
            }
        }
    }
    out.value = value;
    out.diag.est_error = err;
    out.diag.nodes_used = spent;
    out.diag.converged = ok;
    return out;
}

Estimate events_mesoscopic(const BeamSpec& beam, const PotentialSpec& pot, const MesoscopicGaussian& target,
                           const Direction& dir, const QuadratureBudget& budget) {
    const auto raw = events_mesoscopic_raw(beam, pot, target, dir, budget);
    Estimate out = raw.diag;
    out.value = raw.value.real();
    return out;
}

Estimate ratio_r(const BeamSpec& beam, const MesoscopicGaussian& target, const QuadratureBudget& budget) {
    check_mesoscopic(target);
    const double s2 = target.sigma_b * target.sigma_b;
    const double b0 = target.b0;
    auto integrand = [&](double b) {
        const double j = bessel_j(beam.m(), beam.kappa0() * b);
        const double gauss = std::exp(-0.5 * (b - b0) * (b - b0) / s2);
        return j * j * bessel_i0_scaled(b * b0 / s2) * gauss * b / s2;
    };
    // Near the axis J_m^2 grows like b^{2|m|}, which moves the bulk of the
    // integrand out to about sigma_b sqrt(2|m| + 1); cover 8 sigma_b beyond
    // that and below b0.
    const double lower = std::max(0.0, b0 - 8.0 * target.sigma_b);
    const double upper = b0 + target.sigma_b * (8.0 + std::sqrt(2.0 * std::abs(beam.m()) + 1.0));
    const double width = (upper - lower) / (2.0 * kHalflineSigmas);
    const auto q = integrate_halfline(integrand, lower + kHalflineSigmas * width, width, budget);
    Estimate out;
    out.value = q.value.real();
    out.est_error = q.est_error;
    out.absorb(q);
    out.regime_warning = target.sigma_b * beam.sigma_kappa() > 0.1;
    return out;
}

Estimate events_large_target(const BeamSpec& beam, const PotentialSpec& pot, const MesoscopicGaussian& target,
                             const Direction& dir, const QuadratureBudget& budget) {
    dir.validate();
    check_mesoscopic(target);
    const auto form = denominator_form(pot);
    const Transfer tr = transfer(beam, dir);
    const double m = beam.m();
    const double s2 = target.sigma_b * target.sigma_b;
    const double b0 = target.b0;
    const double norm = 1.0 / (kTwoPi * s2);
    const auto inner = inner_budget(budget);

    Estimate out;
    auto integrand = [&](double k) {
        if (k <= 0.0) return 0.0;
        const auto d = denominator_at(form, tr, k);
        const double ring = m / k;  // |b_k|, signed by m
        const int hint = static_cast<int>(std::min(4096.0, std::ceil(std::abs(ring) * b0 / s2)));
        const auto q = integrate_periodic(
            [&](double phi_k) {
                const double f = amplitude_of_w(form, d.alpha - d.beta * std::cos(phi_k - dir.phi));
                const double dist2 = ring * ring + b0 * b0 - 2.0 * ring * b0 * std::sin(phi_k - target.phi_b0);
                return f * f * norm * std::exp(-0.5 * dist2 / s2);
            },
            hint, inner);
        out.absorb(q);
        const double g = weight(beam, k);
        return g * g * q.value.real();
    };
    const auto q = integrate_halfline(integrand, beam.kappa0(), beam.sigma_kappa(), budget);
    const double prefactor = beam.n_electrons() / std::cos(beam.theta_k());
    out.value = prefactor * q.value.real();
    out.est_error = prefactor * q.est_error;
    out.absorb(q);
    out.regime_warning = target.sigma_b * beam.sigma_kappa() < 10.0;
    return out;
}

}  // namespace vborn
