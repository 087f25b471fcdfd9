#pragma once

// Deterministic one-dimensional quadrature used by every physics module:
// equally spaced trapezoid sums for smooth 2pi-periodic integrands,
// Gauss-Legendre panels for Gaussian-localised half-line integrals, and an
// adaptive Gauss-Legendre rule for solid-angle integrals.
//
// Convergence is judged by agreement of two successive refinements.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "vortex_born/errors.hpp"

namespace vborn {

struct QuadratureBudget {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::int64_t max_nodes = std::int64_t{1} << 20;

    /// Throws DomainError unless rel_tol > 0, abs_tol > 0 and max_nodes >= 16.
    void validate() const;

    double tolerance_for(double magnitude) const { return std::max(rel_tol * magnitude, abs_tol); }
};

struct QuadratureResult {
    std::complex<double> value{};
    double est_error = 0.0;
    std::int64_t nodes_used = 0;
    bool converged = false;
};

/// Real-valued result with evaluation diagnostics; shared by the physics layer.
struct Estimate {
    double value = 0.0;
    double est_error = 0.0;
    std::int64_t nodes_used = 0;
    bool converged = true;
    // Exact zero returned by a symmetry shortcut instead of quadrature.
    bool degenerate = false;
    // A caller-asserted regime (wide packet, small or large target) is violated.
    bool regime_warning = false;

    Estimate& absorb(const Estimate& other) {
        nodes_used += other.nodes_used;
        converged = converged && other.converged;
        degenerate = degenerate || other.degenerate;
        regime_warning = regime_warning || other.regime_warning;
        return *this;
    }
    Estimate& absorb(const QuadratureResult& other) {
        nodes_used += other.nodes_used;
        converged = converged && other.converged;
        return *this;
    }
};

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// Cached n-point Gauss-Legendre rule. n must be a power of two in [2, 2048].
const GaussLegendreRule& gauss_legendre(int n);

/// Weighted node on the real line.
struct QuadratureNode {
    double x;
    double w;
};

inline constexpr int kHalflinePanels = 12;
inline constexpr double kHalflineSigmas = 6.0;

/// Node set used by integrate_halfline for a given per-panel order. The
/// interval [max(0, center - 6 width), center + 6 width] is split into
/// equal panels. When the lower end is clipped at zero the rule is built in
/// t = sqrt(k) so that sqrt(k)-type endpoint behaviour stays smooth.
std::vector<QuadratureNode> halfline_rule(double center, double width, int order_per_panel);

namespace detail {

template <class T>
std::complex<double> as_complex(T v) {
    if constexpr (std::is_arithmetic_v<T>) {
        return {static_cast<double>(v), 0.0};
    } else {
        return std::complex<double>(v);
    }
}

}  // namespace detail

/// Mean value (1/2pi) * integral over [0, 2pi) of a smooth periodic f.
///
/// Starts from max(64, 8 * oscillation_hint) equally spaced nodes and doubles
/// (reusing all previous nodes) until two successive sums agree within the
/// budget. An unconverged result is still returned, flagged converged=false.
template <class F>
QuadratureResult integrate_periodic(F&& f, int oscillation_hint, const QuadratureBudget& budget = {}) {
    budget.validate();
    if (oscillation_hint < 0) throw DomainError("integrate_periodic: oscillation_hint must be >= 0");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::int64_t n = std::max<std::int64_t>(64, 8 * std::int64_t{oscillation_hint});
    n = std::max<std::int64_t>(8, std::min(n, budget.max_nodes / 2));

    std::complex<double> sum{};
    for (std::int64_t j = 0; j < n; ++j) sum += detail::as_complex(f(two_pi * double(j) / double(n)));
    std::int64_t used = n;
    std::complex<double> mean = sum / double(n);
    double err = std::abs(mean) + budget.abs_tol;

    while (used + n <= budget.max_nodes) {
        std::complex<double> mid{};
        for (std::int64_t j = 0; j < n; ++j) mid += detail::as_complex(f(two_pi * (double(j) + 0.5) / double(n)));
        used += n;
        sum += mid;
        n *= 2;
        const std::complex<double> refined = sum / double(n);
        err = std::abs(refined - mean);
        mean = refined;
        if (err <= budget.tolerance_for(std::abs(mean))) return {mean, err, used, true};
    }
    return {mean, err, used, false};
}

/// Integral over [0, inf) of f, where f carries a Gaussian envelope with the
/// given center and width. Only [max(0, center - 6 width), center + 6 width]
/// is integrated; the truncated tail is below exp(-18) of the peak.
/// The per-panel Gauss-Legendre order doubles from 8 until agreement.
template <class F>
QuadratureResult integrate_halfline(F&& f, double center, double width, const QuadratureBudget& budget = {}) {
    budget.validate();
    if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("integrate_halfline: width must be > 0");
    if (!std::isfinite(center)) throw DomainError("integrate_halfline: center must be finite");

    auto apply = [&](int order) {
        std::complex<double> acc{};
        for (const auto& node : halfline_rule(center, width, order)) acc += node.w * detail::as_complex(f(node.x));
        return acc;
    };

    if (center + kHalflineSigmas * width <= 0.0) return {{}, 0.0, 0, true};

    int order = 8;
    std::complex<double> prev = apply(order);
    std::int64_t used = std::int64_t{kHalflinePanels} * order;
    double err = std::abs(prev) + budget.abs_tol;
    while (order < 1024 && used + std::int64_t{kHalflinePanels} * 2 * order <= budget.max_nodes) {
        order *= 2;
        const std::complex<double> next = apply(order);
        used += std::int64_t{kHalflinePanels} * order;
        err = std::abs(next - prev);
        prev = next;
        if (err <= budget.tolerance_for(std::abs(prev))) return {prev, err, used, true};
    }
    return {prev, err, used, false};
}

/// Adaptive Gauss-Legendre (16-point panels, bisection on disagreement) for a
/// real integrand on [a, b]. The integrand may report its own cost through
/// `inner` (nodes and convergence of nested quadratures).
template <class H>
Estimate integrate_adaptive(H&& h, double a, double b, const QuadratureBudget& budget, int initial_panels = 8) {
    budget.validate();
    const auto& rule = gauss_legendre(16);
    Estimate out;
    std::int64_t evaluations = 0;

    auto panel = [&](double lo, double hi) {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * h(mid + half * rule.nodes[i], out);
        evaluations += static_cast<std::int64_t>(rule.nodes.size());
        return acc * half;
    };

    struct Segment {
        double lo, hi, whole;
        int depth;
    };

    auto run = [&](double tol) {
        std::vector<Segment> stack;
        const double step = (b - a) / initial_panels;
        for (int i = initial_panels - 1; i >= 0; --i) {
            const double lo = a + step * i;
            const double hi = (i == initial_panels - 1) ? b : lo + step;
            stack.push_back({lo, hi, panel(lo, hi), 0});
        }
        double total = 0.0;
        double error = 0.0;
        bool ok = true;
        while (!stack.empty()) {
            const Segment s = stack.back();
            stack.pop_back();
            const double mid = 0.5 * (s.lo + s.hi);
            const double left = panel(s.lo, mid);
            const double right = panel(mid, s.hi);
            const double diff = std::abs(left + right - s.whole);
            const double share = tol * (s.hi - s.lo) / (b - a);
            if (diff <= share || s.depth >= 48) {
                if (diff > share) ok = false;
                total += left + right;
                error += diff;
                continue;
            }
            if (evaluations >= budget.max_nodes) {
                ok = false;
                total += left + right;
                error += diff;
                continue;
            }
            stack.push_back({mid, s.hi, right, s.depth + 1});
            stack.push_back({s.lo, mid, left, s.depth + 1});
        }
        return std::tuple{total, error, ok};
    };

    double coarse = 0.0;
    {
        const double step = (b - a) / initial_panels;
        for (int i = 0; i < initial_panels; ++i) coarse += panel(a + step * i, a + step * (i + 1));
    }
    auto [total, error, ok] = run(budget.tolerance_for(std::abs(coarse)));
    // The coarse pass can overestimate the magnitude when it straddles a
    // narrow peak badly; redo once with the tolerance from the refined value.
    if (budget.tolerance_for(std::abs(total)) < 0.5 * budget.tolerance_for(std::abs(coarse))) {
        std::tie(total, error, ok) = run(budget.tolerance_for(std::abs(total)));
    }
    out.value = total;
    out.est_error = error;
    out.nodes_used += evaluations;
    out.converged = out.converged && ok;
    return out;
}

/// Integral of f(theta, phi) sin(theta) dtheta dphi over the unit sphere:
/// adaptive Gauss-Legendre in cos(theta), periodic rule in phi.
template <class F>
Estimate integrate_sphere(F&& f, const QuadratureBudget& budget = {}) {
    auto ring = [&](double x, Estimate& acc) {
        const double theta = std::acos(std::clamp(x, -1.0, 1.0));
        const auto inner = integrate_periodic([&](double phi) { return f(theta, phi); }, 0, budget);
        acc.absorb(inner);
        return 2.0 * std::numbers::pi * inner.value.real();
    };
    return integrate_adaptive(ring, -1.0, 1.0, budget);
}

/// Sphere integral of an azimuthally symmetric g(theta): 2pi * int g sin(theta) dtheta.
template <class G>
Estimate integrate_sphere_axial(G&& g, const QuadratureBudget& budget = {}) {
    auto ring = [&](double x, Estimate&) {
        const double theta = std::acos(std::clamp(x, -1.0, 1.0));
        return 2.0 * std::numbers::pi * static_cast<double>(g(theta));
    };
    return integrate_adaptive(ring, -1.0, 1.0, budget);
}

}  // namespace vborn
