#include "vortex_born/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>

#include "vortex_born/errors.hpp"
#include "vortex_born/units.hpp"

#ifndef VORTEX_BORN_VERSION
#define VORTEX_BORN_VERSION "0.0.0"
#endif

namespace vborn {

std::string_view code_version() { return VORTEX_BORN_VERSION; }

int default_jobs() {
    if (const char* env = std::getenv("VORTEX_BORN_JOBS"); env && *env) {
        const std::string_view text(env);
        int jobs = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
        if (ec != std::errc{} || end != text.data() + text.size() || jobs < 1)
            throw ConfigError("VORTEX_BORN_JOBS", "must be a positive integer");
        return jobs;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace {

constexpr double kDeg = units::kDegree;

// Output label in degrees, rounded to 1e-9 deg so that grid points such as
// 33 deg do not print as 32.99999999999999.
double label_deg(double radians) { return std::round(radians / kDeg * 1e9) / 1e9; }

struct GridPoint {
    double radius;
    double theta;
    double phi;
};

bool uses_theta(Observable o) {
    return o == Observable::events || o == Observable::dcs || o == Observable::asymmetry;
}

bool uses_phi(Observable o) { return o == Observable::events || o == Observable::dcs; }

std::string value_kind(const ScenarioConfig& cfg) {
    switch (cfg.observable) {
    case Observable::events: return "events_per_sr";
    case Observable::dcs: return "dcs_a0^2_per_sr";
    case Observable::ratio_r: return "ratio";
    case Observable::asymmetry: return "asymmetry";
    case Observable::density: return "density_a0^-2";
    case Observable::total: return "total_a0^2";
    }
    return "?";
}

class Evaluator {
public:
    explicit Evaluator(const ScenarioConfig& cfg) : cfg_(cfg), beam_(cfg.beam_spec()) {
        if (cfg.superposition) sup_ = cfg.superposition_spec();
    }

    Estimate operator()(const GridPoint& p) const {
        const Direction dir{p.theta, p.phi};
        const bool wide = cfg_.method == Method::wide || cfg_.method == Method::closed;
        switch (cfg_.observable) {
        case Observable::events:
            if (const auto* s = std::get_if<SinglePotential>(&cfg_.target)) {
                SinglePotential t = *s;
                if (cfg_.radius) t.b = p.radius;
                return wide ? events_single_wide(beam_, cfg_.potential, t, dir, cfg_.budget)
                            : events_single(beam_, cfg_.potential, t, dir, cfg_.budget);
            } else {
                MesoscopicGaussian t = std::get<MesoscopicGaussian>(cfg_.target);
                if (cfg_.radius) t.b0 = p.radius;
                return cfg_.model == TargetModel::large_target
                           ? events_large_target(beam_, cfg_.potential, t, dir, cfg_.budget)
                           : events_mesoscopic(beam_, cfg_.potential, t, dir, cfg_.budget);
            }
        case Observable::dcs:
            if (const auto* s = std::get_if<SinglePotential>(&cfg_.target)) {
                SinglePotential t = *s;
                if (cfg_.radius) t.b = p.radius;
                return cross_section_single(beam_, cfg_.potential, t, dir, cfg_.budget, wide);
            }
            if (sup_) return dcs_superposition(*sup_, cfg_.potential, dir, cfg_.budget);
            return dcs_macroscopic(beam_, cfg_.potential, dir, cfg_.method, cfg_.budget);
        case Observable::asymmetry:
            return asymmetry_a(*sup_, cfg_.potential, p.theta, cfg_.budget);
        case Observable::ratio_r: {
            MesoscopicGaussian t = std::get<MesoscopicGaussian>(cfg_.target);
            if (cfg_.radius) t.b0 = p.radius;
            return ratio_r(beam_, t, cfg_.budget);
        }
        case Observable::density:
            return density(beam_, p.radius, cfg_.budget);
        case Observable::total:
            if (sup_) return total_superposition(*sup_, cfg_.potential, cfg_.budget);
            return total_macroscopic(beam_, cfg_.potential, cfg_.method, cfg_.budget);
        }
        return {};
    }

    const BeamSpec& beam() const { return beam_; }

private:
    const ScenarioConfig& cfg_;
    BeamSpec beam_;
    std::optional<SuperpositionSpec> sup_;
};

std::vector<GridPoint> grid_points(const ScenarioConfig& cfg) {
    const GridAxis single{};
    const GridAxis radius = cfg.radius.value_or(single);
    const GridAxis theta = uses_theta(cfg.observable) ? cfg.theta : GridAxis{cfg.theta.min, cfg.theta.min, 1};
    const GridAxis phi = uses_phi(cfg.observable) ? cfg.phi : GridAxis{cfg.phi.min, cfg.phi.min, 1};
    std::vector<GridPoint> points;
    points.reserve(std::size_t(radius.points) * theta.points * phi.points);
    for (int r = 0; r < radius.points; ++r)
        for (int t = 0; t < theta.points; ++t)
            for (int f = 0; f < phi.points; ++f) points.push_back({radius.at(r), theta.at(t), phi.at(f)});
    return points;
}

void normalize(const ScenarioConfig& cfg, const Evaluator& eval, AngularTable& table) {
    table.normalization = std::string(to_string(cfg.normalize));
    if (cfg.normalize == Normalize::axis0) {
        const auto ref = density(eval.beam().with_m(0), 0.0, cfg.budget);
        if (ref.value > 0.0)
            for (auto& row : table.rows) row.value /= ref.value;
        return;
    }
    if (cfg.normalize != Normalize::phi0) return;
    const int per_group = uses_phi(cfg.observable) ? cfg.phi.points : 1;
    for (std::size_t start = 0; start < table.rows.size(); start += per_group) {
        const double ref = table.rows[start].value;
        if (ref == 0.0) {
            table.normalization = "phi0 (skipped for zero reference rows)";
            continue;
        }
        for (int j = 0; j < per_group; ++j) table.rows[start + j].value /= ref;
    }
}

}  // namespace

AngularTable run_scenario(const ScenarioConfig& cfg, int jobs) {
    validate(cfg);
    const Evaluator eval(cfg);
    const auto points = grid_points(cfg);
    std::vector<Estimate> results(points.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                results[i] = eval(points[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(points.size());
                return;
            }
        }
    };
    const int workers = std::clamp<int>(jobs, 1, static_cast<int>(std::max<std::size_t>(1, points.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    AngularTable table;
    table.scenario = cfg.name;
    table.scenario_hash = scenario_hash(cfg);
    table.value_kind = value_kind(cfg);
    table.tolerance = cfg.budget.rel_tol;
    table.code_version = std::string(code_version());
    table.has_radius = cfg.radius.has_value();
    table.rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        const auto& e = results[i];
        table.rows.push_back(
            {p.radius, label_deg(p.theta), label_deg(p.phi), e.value, e.converged, e.nodes_used, e.degenerate, e.regime_warning});
    }
    normalize(cfg, eval, table);
    return table;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}; }

namespace {

std::string int_label(int m) { return "m" + std::to_string(m); }

ScenarioConfig hydrogen_base(std::string name, double theta_k_deg, double sigma_ratio, int m) {
    ScenarioConfig c;
    c.name = std::move(name);
    c.beam.p_i = 10.0;
    c.beam.kappa0 = c.beam.p_i * std::tan(theta_k_deg * kDeg);
    c.beam.sigma_kappa = sigma_ratio * c.beam.kappa0;
    c.beam.m = m;
    c.potential = Hydrogen1s{1.0};
    return c;
}

std::vector<ScenarioConfig> fig1() {
    std::vector<ScenarioConfig> out;
    for (const int tk : {15, 30}) {
        const std::string stem = "fig1_tk" + std::to_string(tk);
        auto localized = hydrogen_base(stem + "_sigma_third", tk, 1.0 / 3.0, 0);
        localized.method = Method::automatic;
        auto wide = hydrogen_base(stem + "_wide", tk, 0.01, 0);
        wide.method = Method::closed;
        auto plane = hydrogen_base(stem + "_plane_wave", 0, 0, 0);
        plane.beam.sigma_kappa = 0.01;
        plane.method = Method::closed;
        for (auto* c : {&localized, &wide, &plane}) {
            c->observable = Observable::dcs;
            c->target = Macroscopic{};
            c->theta = {0.0, 60.0 * kDeg, 121};
            out.push_back(*c);
        }
    }
    return out;
}

std::vector<ScenarioConfig> fig2() {
    std::vector<ScenarioConfig> out;
    for (const int tk : {10, 20, 30}) {
        auto c = hydrogen_base("fig2_tk" + std::to_string(tk), tk, 0.01, 0);
        c.observable = Observable::asymmetry;
        c.method = Method::wide;
        c.superposition = SuperpositionFields{0, 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0.0, 0.0};
        c.theta = {0.0, 60.0 * kDeg, 241};
        out.push_back(c);
    }
    return out;
}

std::vector<ScenarioConfig> fig3() {
    std::vector<ScenarioConfig> out;
    for (const double b : {0.0, 1.0})
        for (const int m : {0, 1, 2}) {
            auto c = hydrogen_base(std::string("fig3_b") + (b == 0.0 ? "0" : "1") + "_" + int_label(m), 10, 0.2, m);
            c.observable = Observable::events;
            c.method = Method::general;
            c.target = SinglePotential{b, 0.0};
            c.theta = {0.0, 40.0 * kDeg, 161};
            out.push_back(c);
        }
    return out;
}

std::vector<ScenarioConfig> fig4() {
    std::vector<ScenarioConfig> out;
    for (const int theta : {1, 20})
        for (int m = -2; m <= 2; ++m) {
            auto c = hydrogen_base("fig4_theta" + std::to_string(theta) + "_" + int_label(m), 10, 0.2, m);
            c.observable = Observable::events;
            c.method = Method::general;
            c.target = SinglePotential{2.0, 0.0};
            c.theta = {theta * kDeg, theta * kDeg, 1};
            c.phi = {0.0, 360.0 * kDeg, 73};
            c.normalize = Normalize::phi0;
            out.push_back(c);
        }
    return out;
}

std::vector<ScenarioConfig> fig5() {
    const double nm = units::kBohrPerNm;
    std::vector<ScenarioConfig> ratios;
    std::vector<ScenarioConfig> densities;
    for (const int m : {0, 1, 3, 5}) {
        ScenarioConfig c;
        c.beam.p_i = 10.0;
        c.beam.kappa0 = 1.0 / (10.0 * nm);
        c.beam.sigma_kappa = 1.0 / (50.0 * nm);
        c.beam.m = m;
        c.potential = Hydrogen1s{1.0};
        c.radius = GridAxis{0.0, 60.0 * nm, 121};

        auto r = c;
        r.name = "fig5_ratio_" + int_label(m);
        r.observable = Observable::ratio_r;
        r.target = MesoscopicGaussian{0.0, 0.0, 10.0 * nm};
        ratios.push_back(r);

        auto d = c;
        d.name = "fig5_density_" + int_label(m);
        d.observable = Observable::density;
        d.target = Macroscopic{};
        d.normalize = Normalize::axis0;
        densities.push_back(d);
    }
    ratios.insert(ratios.end(), densities.begin(), densities.end());
    return ratios;
}

std::vector<ScenarioConfig> fig6() {
    const double nm = units::kBohrPerNm;
    std::vector<ScenarioConfig> out;
    for (const int m : {0, 50, 100}) {
        auto c = hydrogen_base("fig6_" + int_label(m), 1, 1.0, m);
        c.beam.sigma_kappa = 1.0 / (2.0 * nm);
        c.observable = Observable::events;
        c.target = MesoscopicGaussian{0.0, 0.0, 10.0 * nm};
        c.model = TargetModel::large_target;
        c.theta = {1.0 * kDeg, 1.0 * kDeg, 1};
        c.radius = GridAxis{0.0, 1000.0, 201};
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<ScenarioConfig> preset(std::string_view name) {
    std::vector<ScenarioConfig> out;
    if (name == "fig1") out = fig1();
    else if (name == "fig2") out = fig2();
    else if (name == "fig3") out = fig3();
    else if (name == "fig4") out = fig4();
    else if (name == "fig5") out = fig5();
    else if (name == "fig6") out = fig6();
    else throw UnknownPreset("unknown preset '" + std::string(name) + "' (expected fig1 ... fig6)");
    for (const auto& c : out) validate(c);
    return out;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_slope: need two or more matching points");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace vborn
