#include "vortex_born/beams.hpp"

#include <cmath>
#include <numbers>

#include "vortex_born/special.hpp"

namespace vborn {

namespace {

void check_params(const BeamParams& p) {
    if (!(p.kappa0 >= 0.0) || !std::isfinite(p.kappa0)) throw DomainError("beam: kappa0 must be >= 0");
    if (!(p.sigma_kappa > 0.0) || !std::isfinite(p.sigma_kappa)) throw DomainError("beam: sigma_kappa must be > 0");
    if (!(p.p_i > 0.0) || !std::isfinite(p.p_i)) throw DomainError("beam: p_i must be > 0");
    if (!(p.n_electrons > 0.0)) throw DomainError("beam: n_electrons must be > 0");
    if (!(p.sigma_z > 0.0)) throw DomainError("beam: sigma_z must be > 0");
    if (!(p.a_field > 0.0)) throw DomainError("beam: a_field must be > 0");
}

double normalisation(double kappa0, double sigma) {
    QuadratureBudget budget;
    budget.rel_tol = 1e-13;
    budget.abs_tol = 1e-300;
    const double sigma2 = sigma * sigma;
    const auto area = integrate_halfline(
        [&](double k) { return std::exp(-(k - kappa0) * (k - kappa0) / sigma2); }, kappa0, sigma, budget);
    return 1.0 / std::sqrt(area.value.real());
}

}  // namespace

BeamSpec::BeamSpec(const BeamParams& params) : params_(params), norm_(0.0) {
    check_params(params_);
    norm_ = normalisation(params_.kappa0, params_.sigma_kappa);
}

BeamSpec BeamSpec::from_opening_angle(double theta_k, double p_i, double sigma_kappa, int m) {
    if (!(theta_k >= 0.0 && theta_k < 0.5 * std::numbers::pi)) throw DomainError("beam: theta_k must lie in [0, pi/2)");
    BeamParams p;
    p.kappa0 = p_i * std::tan(theta_k);
    p.sigma_kappa = sigma_kappa;
    p.p_i = p_i;
    p.m = m;
    return BeamSpec(p);
}

double BeamSpec::theta_k() const noexcept { return std::atan2(params_.kappa0, params_.p_i); }

double BeamSpec::p_f() const noexcept { return std::hypot(params_.p_i, params_.kappa0); }

BeamSpec BeamSpec::with_m(int m) const {
    BeamSpec copy = *this;
    copy.params_.m = m;
    return copy;
}

BeamSpec BeamSpec::with_n_electrons(double n) const {
    if (!(n > 0.0)) throw DomainError("beam: n_electrons must be > 0");
    BeamSpec copy = *this;
    copy.params_.n_electrons = n;
    return copy;
}

double weight(const BeamSpec& beam, double kappa) {
    if (!(kappa >= 0.0)) throw DomainError("weight: kappa must be >= 0");
    const double d = (kappa - beam.kappa0()) / beam.sigma_kappa();
    return beam.norm() * std::exp(-0.5 * d * d);
}

Estimate radial_profile(const BeamSpec& beam, double r_perp, const QuadratureBudget& budget) {
    if (!(r_perp >= 0.0)) throw DomainError("radial_profile: r_perp must be >= 0");
    Estimate out;
    if (beam.m() != 0 && r_perp == 0.0) return out;
    const auto q = integrate_halfline(
        [&](double k) { return std::sqrt(k) * bessel_j(beam.m(), k * r_perp) * weight(beam, k); }, beam.kappa0(),
        beam.sigma_kappa(), budget);
    out.value = q.value.real();
    out.est_error = q.est_error;
    out.absorb(q);
    return out;
}

Estimate density(const BeamSpec& beam, double r_perp, const QuadratureBudget& budget) {
    Estimate out = radial_profile(beam, r_perp, budget);
    out.est_error = 2.0 * std::abs(out.value) * out.est_error / (2.0 * std::numbers::pi);
    out.value = out.value * out.value / (2.0 * std::numbers::pi);
    return out;
}

Estimate luminosity(const BeamSpec& beam, const QuadratureBudget& budget) {
    const auto q = integrate_halfline(
        [&](double k) { return weight(beam, k) * std::sqrt(k / (2.0 * std::numbers::pi)); }, beam.kappa0(),
        beam.sigma_kappa(), budget);
    Estimate out;
    const double amplitude = q.value.real();
    const double scale = beam.n_electrons() / std::cos(beam.theta_k());
    out.value = scale * amplitude * amplitude;
    out.est_error = scale * 2.0 * std::abs(amplitude) * q.est_error;
    out.absorb(q);
    return out;
}

ValidityReport check_validity(const BeamSpec& beam) {
    constexpr double much = 10.0;
    const auto& p = beam.params();
    ValidityReport report;
    report.packet_over_potential = p.sigma_z / p.a_field;
    const double spread = beam.kappa0() > 0.0 ? p.p_i / (p.kappa0 * p.sigma_kappa) : INFINITY;
    report.spread_over_packet = spread / p.sigma_z;
    report.potential_vs_packet = report.packet_over_potential >= much ? Verdict::pass : Verdict::warn;
    report.packet_vs_spread = report.spread_over_packet >= much ? Verdict::pass : Verdict::warn;
    return report;
}

void SuperpositionSpec::validate() const {
    if (!(c1_abs >= 0.0) || !(c2_abs >= 0.0)) throw DomainError("superposition: |c1|, |c2| must be >= 0");
    if (std::abs(c1_abs * c1_abs + c2_abs * c2_abs - 1.0) > 1e-12) {
        throw DomainError("superposition: |c1|^2 + |c2|^2 must equal 1");
    }
}

}  // namespace vborn
