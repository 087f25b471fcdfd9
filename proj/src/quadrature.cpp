#include "vortex_born/quadrature.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace vborn {

void QuadratureBudget::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("QuadratureBudget: rel_tol must be > 0");
    if (!(abs_tol > 0.0)) throw DomainError("QuadratureBudget: abs_tol must be > 0");
    if (max_nodes < 16) throw DomainError("QuadratureBudget: max_nodes must be >= 16");
}

namespace {

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on the three-term recurrence.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

constexpr int kMaxRuleLog2 = 11;

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static const std::array<GaussLegendreRule, kMaxRuleLog2> table = [] {
        std::array<GaussLegendreRule, kMaxRuleLog2> t;
        for (int k = 1; k <= kMaxRuleLog2; ++k) t[k - 1] = build_rule(1 << k);
        return t;
    }();
    if (n < 2 || n > (1 << kMaxRuleLog2) || !std::has_single_bit(static_cast<unsigned>(n))) {
        throw DomainError("gauss_legendre: order " + std::to_string(n) + " is not a power of two in [2, 2048]");
    }
    return table[std::countr_zero(static_cast<unsigned>(n)) - 1];
}

std::vector<QuadratureNode> halfline_rule(double center, double width, int order_per_panel) {
    if (!(width > 0.0)) throw DomainError("halfline_rule: width must be > 0");
    const auto& rule = gauss_legendre(order_per_panel);
    const double upper = center + kHalflineSigmas * width;
    const double lower = center - kHalflineSigmas * width;
    std::vector<QuadratureNode> out;
    if (upper <= 0.0) return out;
    out.reserve(static_cast<std::size_t>(kHalflinePanels) * order_per_panel);

    const bool clipped = lower <= 0.0;
    // Clipped intervals are mapped through k = t^2, dk = 2 t dt.
    const double a = clipped ? 0.0 : lower;
    const double b = clipped ? std::sqrt(upper) : upper;
    const double step = (b - a) / kHalflinePanels;
    for (int p = 0; p < kHalflinePanels; ++p) {
        const double lo = a + step * p;
        const double half = 0.5 * step;
        const double mid = lo + half;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = mid + half * rule.nodes[i];
            const double w = half * rule.weights[i];
            if (clipped) {
                out.push_back({t * t, 2.0 * t * w});
            } else {
                out.push_back({t, w});
            }
        }
    }
    return out;
}

}  // namespace vborn
