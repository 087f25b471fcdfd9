#include "vortex_born/config.hpp"

#include <array>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "vortex_born/errors.hpp"
#include "vortex_born/units.hpp"

namespace vborn {

using units::Dimension;

std::string_view to_string(Observable o) {
    switch (o) {
    case Observable::events: return "events";
    case Observable::dcs: return "dcs";
    case Observable::ratio_r: return "ratio_r";
    case Observable::asymmetry: return "asymmetry";
    case Observable::density: return "density";
    case Observable::total: return "total";
    }
    return "?";
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::automatic: return "auto";
    case Method::general: return "general";
    case Method::wide: return "wide";
    case Method::closed: return "closed";
    }
    return "?";
}

std::string_view to_string(Normalize n) {
    switch (n) {
    case Normalize::none: return "none";
    case Normalize::phi0: return "phi0";
    case Normalize::axis0: return "axis0";
    }
    return "?";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string format_number(double x) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

SuperpositionSpec ScenarioConfig::superposition_spec() const {
    if (!superposition) throw ConfigError("superposition", "observable needs a superposition section");
    const auto& s = *superposition;
    BeamParams base = beam;
    base.m = s.m1;
    return SuperpositionSpec{BeamSpec(base), s.m1, s.m2, s.c1, s.c2, s.alpha1, s.alpha2};
}

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

constexpr std::array kKnownKeys = {
    "name",
    "observable",
    "method",
    "beam.p_i",
    "beam.energy",
    "beam.kappa0",
    "beam.theta_k",
    "beam.sigma_kappa",
    "beam.sigma_kappa_ratio",
    "beam.m",
    "beam.n_electrons",
    "beam.sigma_z",
    "beam.a_field",
    "potential.kind",
    "potential.v0",
    "potential.mu",
    "potential.a0",
    "target.kind",
    "target.model",
    "target.b",
    "target.phi_b",
    "target.b0",
    "target.phi_b0",
    "target.sigma_b",
    "superposition.m1",
    "superposition.m2",
    "superposition.c1",
    "superposition.c2",
    "superposition.alpha1",
    "superposition.alpha2",
    "grid.theta_min",
    "grid.theta_max",
    "grid.theta_steps",
    "grid.phi_min",
    "grid.phi_max",
    "grid.phi_steps",
    "grid.radius_min",
    "grid.radius_max",
    "grid.radius_steps",
    "budget.rel_tol",
    "budget.abs_tol",
    "budget.max_nodes",
    "output.path",
    "output.format",
    "output.normalize",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

class Reader {
public:
    explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    int line_of(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    std::optional<std::string> text(const std::string& key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        it->second.used = true;
        return it->second.value;
    }

    std::optional<double> quantity(const std::string& key, Dimension dim) {
        const auto t = text(key);
        if (!t) return std::nullopt;
        try {
            const double v = units::parse_quantity(*t, dim);
            if (!std::isfinite(v)) throw std::invalid_argument("value is not finite");
            return v;
        } catch (const std::invalid_argument& e) {
            throw ConfigError(key, e.what(), line_of(key));
        }
    }

    double quantity_or(const std::string& key, Dimension dim, double fallback) {
        return quantity(key, dim).value_or(fallback);
    }

    double required(const std::string& key, Dimension dim) {
        const auto v = quantity(key, dim);
        if (!v) throw ConfigError(key, "missing required key");
        return *v;
    }

    std::optional<std::int64_t> integer(const std::string& key) {
        const auto t = text(key);
        if (!t) return std::nullopt;
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(t->data(), t->data() + t->size(), v);
        if (ec != std::errc{} || end != t->data() + t->size())
            throw ConfigError(key, "'" + *t + "' is not an integer", line_of(key));
        return v;
    }

    template <class E, std::size_t N>
    std::optional<E> choice(const std::string& key, const std::array<std::pair<std::string_view, E>, N>& options) {
        const auto t = text(key);
        if (!t) return std::nullopt;
        for (const auto& [label, value] : options)
            if (*t == label) return value;
        std::string allowed;
        for (const auto& [label, value] : options) allowed += (allowed.empty() ? "" : "|") + std::string(label);
        throw ConfigError(key, "'" + *t + "' is not one of " + allowed, line_of(key));
    }

private:
    std::map<std::string, Entry> entries_;
};

int to_int(Reader& r, const std::string& key, int fallback, int lo, int hi) {
    const auto v = r.integer(key);
    if (!v) return fallback;
    if (*v < lo || *v > hi)
        throw ConfigError(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", r.line_of(key));
    return static_cast<int>(*v);
}

GridAxis read_axis(Reader& r, const std::string& stem, Dimension dim) {
    GridAxis axis;
    axis.min = r.quantity_or("grid." + stem + "_min", dim, 0.0);
    axis.max = r.quantity_or("grid." + stem + "_max", dim, axis.min);
    axis.points = to_int(r, "grid." + stem + "_steps", 1, 1, 1 << 20);
    if (axis.max < axis.min) throw ConfigError("grid." + stem + "_max", "must not be below the minimum");
    return axis;
}

BeamParams read_beam(Reader& r) {
    BeamParams p;
    if (r.has("beam.p_i") && r.has("beam.energy"))
        throw ConfigError("beam.energy", "give either beam.p_i or beam.energy, not both", r.line_of("beam.energy"));
    if (const auto e = r.quantity("beam.energy", Dimension::energy)) {
        if (!(*e > 0.0)) throw ConfigError("beam.energy", "must be > 0", r.line_of("beam.energy"));
        p.p_i = units::momentum_from_energy(*e);
    } else {
        p.p_i = r.required("beam.p_i", Dimension::inverse_length);
    }

    if (r.has("beam.kappa0") && r.has("beam.theta_k"))
        throw ConfigError("beam.theta_k", "give either beam.kappa0 or beam.theta_k, not both", r.line_of("beam.theta_k"));
    if (const auto t = r.quantity("beam.theta_k", Dimension::angle)) {
        if (!(*t >= 0.0 && *t < 0.5 * std::numbers::pi))
            throw ConfigError("beam.theta_k", "must lie in [0, 90) deg", r.line_of("beam.theta_k"));
        p.kappa0 = p.p_i * std::tan(*t);
    } else {
        p.kappa0 = r.required("beam.kappa0", Dimension::inverse_length);
    }

    if (r.has("beam.sigma_kappa") && r.has("beam.sigma_kappa_ratio"))
        throw ConfigError("beam.sigma_kappa_ratio", "give either beam.sigma_kappa or beam.sigma_kappa_ratio, not both",
                          r.line_of("beam.sigma_kappa_ratio"));
    if (const auto ratio = r.quantity("beam.sigma_kappa_ratio", Dimension::dimensionless)) {
        p.sigma_kappa = *ratio * p.kappa0;
        if (!(p.sigma_kappa > 0.0))
            throw ConfigError("beam.sigma_kappa_ratio", "needs kappa0 > 0 and a positive ratio",
                              r.line_of("beam.sigma_kappa_ratio"));
    } else {
        p.sigma_kappa = r.required("beam.sigma_kappa", Dimension::inverse_length);
    }

    p.m = to_int(r, "beam.m", 0, -512, 512);
    p.n_electrons = r.quantity_or("beam.n_electrons", Dimension::dimensionless, 1.0);
    p.sigma_z = r.quantity_or("beam.sigma_z", Dimension::length, p.sigma_z);
    p.a_field = r.quantity_or("beam.a_field", Dimension::length, p.a_field);
    return p;
}

PotentialSpec read_potential(Reader& r) {
    enum class Kind { yukawa, hydrogen };
    static constexpr std::array kinds{std::pair{std::string_view("yukawa"), Kind::yukawa},
                                      std::pair{std::string_view("hydrogen"), Kind::hydrogen}};
    const auto kind = r.choice("potential.kind", kinds);
    if (!kind) throw ConfigError("potential.kind", "missing required key");
    if (*kind == Kind::yukawa) {
        if (r.has("potential.a0")) throw ConfigError("potential.a0", "not a Yukawa parameter", r.line_of("potential.a0"));
        return Yukawa{r.quantity_or("potential.v0", Dimension::coupling, 1.0),
                      r.quantity_or("potential.mu", Dimension::inverse_length, 1.0)};
    }
    for (const char* key : {"potential.v0", "potential.mu"})
        if (r.has(key)) throw ConfigError(key, "not a hydrogen parameter", r.line_of(key));
    return Hydrogen1s{r.quantity_or("potential.a0", Dimension::length, 1.0)};
}

TargetSpec read_target(Reader& r, TargetModel& model) {
    enum class Kind { single, mesoscopic, macroscopic };
    static constexpr std::array kinds{std::pair{std::string_view("single"), Kind::single},
                                      std::pair{std::string_view("mesoscopic"), Kind::mesoscopic},
                                      std::pair{std::string_view("macroscopic"), Kind::macroscopic}};
    static constexpr std::array models{std::pair{std::string_view("exact"), TargetModel::exact},
                                       std::pair{std::string_view("large_target"), TargetModel::large_target}};
    const auto kind = r.choice("target.kind", kinds).value_or(Kind::macroscopic);
    model = r.choice("target.model", models).value_or(TargetModel::exact);

    auto reject = [&](std::initializer_list<const char*> keys, const char* why) {
        for (const char* key : keys)
            if (r.has(key)) throw ConfigError(key, why, r.line_of(key));
    };
    switch (kind) {
    case Kind::single:
        reject({"target.b0", "target.phi_b0", "target.sigma_b", "target.model"}, "only valid for a mesoscopic target");
        return SinglePotential{r.quantity_or("target.b", Dimension::length, 0.0),
                               r.quantity_or("target.phi_b", Dimension::angle, 0.0)};
    case Kind::mesoscopic: {
        reject({"target.b", "target.phi_b"}, "only valid for a single-potential target");
        MesoscopicGaussian t;
        t.b0 = r.quantity_or("target.b0", Dimension::length, 0.0);
        t.phi_b0 = r.quantity_or("target.phi_b0", Dimension::angle, 0.0);
        t.sigma_b = r.required("target.sigma_b", Dimension::length);
        return t;
    }
    case Kind::macroscopic:
        reject({"target.b", "target.phi_b", "target.b0", "target.phi_b0", "target.sigma_b", "target.model"},
               "not valid for a macroscopic target");
        return Macroscopic{};
    }
    return Macroscopic{};
}

std::optional<SuperpositionFields> read_superposition(Reader& r) {
    const bool any = r.has("superposition.m1") || r.has("superposition.m2") || r.has("superposition.c1") ||
                     r.has("superposition.c2") || r.has("superposition.alpha1") || r.has("superposition.alpha2");
    if (!any) return std::nullopt;
    SuperpositionFields s;
    s.m1 = to_int(r, "superposition.m1", 0, -512, 512);
    s.m2 = to_int(r, "superposition.m2", 0, -512, 512);
    const auto c1 = r.quantity("superposition.c1", Dimension::dimensionless);
    const auto c2 = r.quantity("superposition.c2", Dimension::dimensionless);
    if (!c1 && !c2) throw ConfigError("superposition.c1", "missing required key");
    s.c1 = c1 ? *c1 : std::sqrt(std::max(0.0, 1.0 - *c2 * *c2));
    s.c2 = c2 ? *c2 : std::sqrt(std::max(0.0, 1.0 - *c1 * *c1));
    if (s.c1 < 0.0 || s.c2 < 0.0) throw ConfigError("superposition.c1", "moduli must be >= 0");
    const double norm = std::hypot(s.c1, s.c2);
    if (std::abs(norm * norm - 1.0) > 1e-6)
        throw ConfigError("superposition.c2", "|c1|^2 + |c2|^2 must equal 1", r.line_of("superposition.c2"));
    // Exact normalisation; typed decimals such as 0.7071068 are accepted.
    s.c1 /= norm;
    s.c2 /= norm;
    s.alpha1 = r.quantity_or("superposition.alpha1", Dimension::angle, 0.0);
    s.alpha2 = r.quantity_or("superposition.alpha2", Dimension::angle, 0.0);
    return s;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
    std::map<std::string, Entry> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("", "expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (key.empty()) throw ConfigError("", "empty key", line_no);
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
            throw ConfigError(key, "unknown key", line_no);
        if (entries.count(key)) throw ConfigError(key, "duplicate key", line_no);
        entries.emplace(key, Entry{std::string(value), line_no});
    }

    Reader r(std::move(entries));
    ScenarioConfig cfg;
    if (const auto name = r.text("name")) cfg.name = *name;

    static constexpr std::array observables{
        std::pair{std::string_view("events"), Observable::events},
        std::pair{std::string_view("dcs"), Observable::dcs},
        std::pair{std::string_view("ratio_r"), Observable::ratio_r},
        std::pair{std::string_view("asymmetry"), Observable::asymmetry},
        std::pair{std::string_view("density"), Observable::density},
        std::pair{std::string_view("total"), Observable::total},
    };
    static constexpr std::array methods{
        std::pair{std::string_view("auto"), Method::automatic},
        std::pair{std::string_view("general"), Method::general},
        std::pair{std::string_view("wide"), Method::wide},
        std::pair{std::string_view("closed"), Method::closed},
    };
    static constexpr std::array formats{std::pair{std::string_view("csv"), OutputFormat::csv},
                                        std::pair{std::string_view("json"), OutputFormat::json}};
    static constexpr std::array normalizations{std::pair{std::string_view("none"), Normalize::none},
                                               std::pair{std::string_view("phi0"), Normalize::phi0},
                                               std::pair{std::string_view("axis0"), Normalize::axis0}};

    const auto observable = r.choice("observable", observables);
    if (!observable) throw ConfigError("observable", "missing required key");
    cfg.observable = *observable;
    cfg.method = r.choice("method", methods).value_or(Method::automatic);

    cfg.beam = read_beam(r);
    cfg.potential = read_potential(r);
    cfg.target = read_target(r, cfg.model);
    cfg.superposition = read_superposition(r);

    cfg.theta = read_axis(r, "theta", Dimension::angle);
    cfg.phi = read_axis(r, "phi", Dimension::angle);
    if (r.has("grid.radius_min") || r.has("grid.radius_max") || r.has("grid.radius_steps"))
        cfg.radius = read_axis(r, "radius", Dimension::length);

    cfg.budget.rel_tol = r.quantity_or("budget.rel_tol", Dimension::dimensionless, cfg.budget.rel_tol);
    cfg.budget.abs_tol = r.quantity_or("budget.abs_tol", Dimension::dimensionless, cfg.budget.abs_tol);
    if (const auto n = r.integer("budget.max_nodes")) cfg.budget.max_nodes = *n;

    if (const auto path = r.text("output.path")) cfg.output_path = *path;
    cfg.format = r.choice("output.format", formats).value_or(OutputFormat::csv);
    cfg.normalize = r.choice("output.normalize", normalizations).value_or(Normalize::none);

    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const ScenarioConfig& cfg) {
    auto wrap = [](const char* field, auto&& fn) {
        try {
            fn();
        } catch (const DomainError& e) {
            throw ConfigError(field, e.what());
        }
    };
    wrap("beam", [&] { (void)cfg.beam_spec(); });
    wrap("potential", [&] { validate(cfg.potential); });
    wrap("target", [&] { validate(cfg.target); });
    wrap("budget", [&] { cfg.budget.validate(); });
    if (cfg.superposition) wrap("superposition", [&] { cfg.superposition_spec().validate(); });

    auto check_axis = [](const GridAxis& a, const char* field, double lo, double hi) {
        if (a.points < 1) throw ConfigError(field, "steps must be >= 1");
        if (a.max < a.min) throw ConfigError(field, "max must not be below min");
        if (a.min < lo || a.max > hi) throw ConfigError(field, "outside the allowed range");
    };
    check_axis(cfg.theta, "grid.theta", 0.0, std::numbers::pi * (1.0 + 1e-15));
    check_axis(cfg.phi, "grid.phi", -1e6, 1e6);
    if (cfg.radius) check_axis(*cfg.radius, "grid.radius", 0.0, 1e12);

    const bool single = std::holds_alternative<SinglePotential>(cfg.target);
    const bool meso = std::holds_alternative<MesoscopicGaussian>(cfg.target);
    const bool macro = std::holds_alternative<Macroscopic>(cfg.target);
    const bool closed = cfg.method == Method::closed;

    switch (cfg.observable) {
    case Observable::events:
        if (macro) throw ConfigError("observable", "events need a single or mesoscopic target; use dcs for a macroscopic one");
        if (cfg.superposition) throw ConfigError("superposition", "only used by asymmetry, dcs and total on a macroscopic target");
        if (closed) {
            const bool central = single && std::get<SinglePotential>(cfg.target).b == 0.0 && !cfg.radius;
            if (!central) throw ConfigError("method", "closed events exist only for a single potential at b = 0");
        }
        break;
    case Observable::dcs:
        if (meso) throw ConfigError("observable", "dcs is not defined for a mesoscopic target; use events or ratio_r");
        if (cfg.superposition && !macro) throw ConfigError("superposition", "superpositions need a macroscopic target");
        if (single && closed) {
            const bool central = std::get<SinglePotential>(cfg.target).b == 0.0 && !cfg.radius;
            if (!central) throw ConfigError("method", "closed cross sections exist only for a single potential at b = 0");
        }
        break;
    case Observable::asymmetry:
    case Observable::total:
        if (!macro) throw ConfigError("target.kind", std::string(to_string(cfg.observable)) + " needs a macroscopic target");
        if (cfg.observable == Observable::asymmetry && !cfg.superposition)
            throw ConfigError("superposition", "asymmetry needs a superposition section");
        if (cfg.observable == Observable::asymmetry && closed)
            throw ConfigError("method", "the asymmetry has no closed form");
        if (cfg.observable == Observable::total && cfg.superposition && closed)
            throw ConfigError("method", "the superposition total has no closed form");
        break;
    case Observable::ratio_r:
        if (!meso) throw ConfigError("target.kind", "ratio_r needs a mesoscopic target");
        if (closed) throw ConfigError("method", "ratio_r has no closed form");
        break;
    case Observable::density:
        if (!cfg.radius) throw ConfigError("grid.radius_steps", "density needs a radius grid");
        if (closed) throw ConfigError("method", "the density has no closed form");
        break;
    }
    if (cfg.model == TargetModel::large_target && cfg.observable != Observable::events)
        throw ConfigError("target.model", "large_target applies to events only");
    if (cfg.radius && macro && cfg.observable != Observable::density)
        throw ConfigError("grid.radius_steps", "a radius sweep needs a single or mesoscopic target");
    if (cfg.normalize == Normalize::axis0 && cfg.observable != Observable::density)
        throw ConfigError("output.normalize", "axis0 applies to density only");
}

std::string to_text(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto put = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    auto num = [](double x, std::string_view unit = {}) {
        std::string s = format_number(x);
        if (!unit.empty()) s += " " + std::string(unit);
        return s;
    };

    put("name", cfg.name);
    put("observable", std::string(to_string(cfg.observable)));
    put("method", std::string(to_string(cfg.method)));
    put("beam.p_i", num(cfg.beam.p_i, "/a0"));
    put("beam.kappa0", num(cfg.beam.kappa0, "/a0"));
    put("beam.sigma_kappa", num(cfg.beam.sigma_kappa, "/a0"));
    put("beam.m", std::to_string(cfg.beam.m));
    put("beam.n_electrons", num(cfg.beam.n_electrons));
    put("beam.sigma_z", num(cfg.beam.sigma_z, "a0"));
    put("beam.a_field", num(cfg.beam.a_field, "a0"));
    if (const auto* y = std::get_if<Yukawa>(&cfg.potential)) {
        put("potential.kind", "yukawa");
        put("potential.v0", num(y->v0, "au"));
        put("potential.mu", num(y->mu, "/a0"));
    } else {
        put("potential.kind", "hydrogen");
        put("potential.a0", num(std::get<Hydrogen1s>(cfg.potential).a0, "a0"));
    }
    if (const auto* s = std::get_if<SinglePotential>(&cfg.target)) {
        put("target.kind", "single");
        put("target.b", num(s->b, "a0"));
        put("target.phi_b", num(s->phi_b, "rad"));
    } else if (const auto* g = std::get_if<MesoscopicGaussian>(&cfg.target)) {
        put("target.kind", "mesoscopic");
        put("target.model", cfg.model == TargetModel::exact ? "exact" : "large_target");
        put("target.b0", num(g->b0, "a0"));
        put("target.phi_b0", num(g->phi_b0, "rad"));
        put("target.sigma_b", num(g->sigma_b, "a0"));
    } else {
        put("target.kind", "macroscopic");
    }
    if (cfg.superposition) {
        const auto& s = *cfg.superposition;
        put("superposition.m1", std::to_string(s.m1));
        put("superposition.m2", std::to_string(s.m2));
        put("superposition.c1", num(s.c1));
        put("superposition.c2", num(s.c2));
        put("superposition.alpha1", num(s.alpha1, "rad"));
        put("superposition.alpha2", num(s.alpha2, "rad"));
    }
    auto axis = [&](std::string_view stem, const GridAxis& a, std::string_view unit) {
        put("grid." + std::string(stem) + "_min", num(a.min, unit));
        put("grid." + std::string(stem) + "_max", num(a.max, unit));
        put("grid." + std::string(stem) + "_steps", std::to_string(a.points));
    };
    axis("theta", cfg.theta, "rad");
    axis("phi", cfg.phi, "rad");
    if (cfg.radius) axis("radius", *cfg.radius, "a0");
    put("budget.rel_tol", num(cfg.budget.rel_tol));
    put("budget.abs_tol", num(cfg.budget.abs_tol));
    put("budget.max_nodes", std::to_string(cfg.budget.max_nodes));
    if (!cfg.output_path.empty()) put("output.path", cfg.output_path);
    put("output.format", std::string(to_string(cfg.format)));
    put("output.normalize", std::string(to_string(cfg.normalize)));
    return out.str();
}

std::string scenario_hash(const ScenarioConfig& cfg) {
    // Where and how the table is written does not change the physics.
    ScenarioConfig physics = cfg;
    physics.output_path.clear();
    physics.format = OutputFormat::csv;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : to_text(physics)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(h));
    return buf.data();
}

}  // namespace vborn
