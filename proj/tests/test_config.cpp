#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "vortex_born/config.hpp"
#include "vortex_born/scenario.hpp"
#include "vortex_born/units.hpp"

using namespace vborn;

namespace {

constexpr double kDeg = units::kDegree;

const char* kMacroscopic = R"(# comment line
name = tk15
observable = dcs
method = closed
beam.p_i = 10 /a0
beam.theta_k = 15 deg
beam.sigma_kappa_ratio = 0.01
potential.kind = hydrogen
target.kind = macroscopic
grid.theta_min = 0 deg
grid.theta_max = 60 deg
grid.theta_steps = 13
)";

const char* kSingle = R"(name = single
observable = events
beam.p_i = 10 /a0
beam.theta_k = 10 deg
beam.sigma_kappa_ratio = 0.2
beam.m = 1
potential.kind = hydrogen
target.kind = single
target.b = 0 a0
grid.theta_min = 0 deg
grid.theta_max = 20 deg
grid.theta_steps = 5
grid.phi_min = 0 deg
grid.phi_max = 90 deg
grid.phi_steps = 3
)";

std::string replace(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

std::string csv_of(const AngularTable& t) {
    std::ostringstream s;
    write_csv(t, s);
    return s.str();
}

template <class F>
ConfigError config_error(F&& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        return e;
    }
    FAIL("expected ConfigError");
    return ConfigError("", "");
}

}  // namespace

TEST_CASE("parse a macroscopic config") {
    const auto cfg = parse_config(kMacroscopic);
    CHECK(cfg.name == "tk15");
    CHECK(cfg.observable == Observable::dcs);
    CHECK(cfg.method == Method::closed);
    CHECK(cfg.beam.p_i == 10.0);
    CHECK(cfg.beam.kappa0 == approx(10.0 * std::tan(15 * kDeg)).epsilon(1e-15));
    CHECK(cfg.beam.sigma_kappa == approx(0.01 * cfg.beam.kappa0).epsilon(1e-15));
    CHECK(std::holds_alternative<Hydrogen1s>(cfg.potential));
    CHECK(std::holds_alternative<Macroscopic>(cfg.target));
    CHECK(cfg.theta.points == 13);
    CHECK(cfg.theta.at(12) == approx(60 * kDeg));
    CHECK(cfg.phi.points == 1);
    CHECK_FALSE(cfg.radius.has_value());
}

TEST_CASE("units and alternative keys") {
    auto cfg = parse_config(replace(kSingle, "beam.p_i = 10 /a0", "beam.energy = 1.3605693 keV"));
    CHECK(cfg.beam.p_i == approx(10.0).epsilon(1e-7));
    cfg = parse_config(replace(replace(kSingle, "target.b = 0 a0", "target.b = 0.1 nm"), "beam.theta_k = 10 deg",
                               "beam.kappa0 = \"1.5 /a0\""));
    const auto& t = std::get<SinglePotential>(cfg.target);
    CHECK(t.b == approx(0.1 * units::kBohrPerNm));
    CHECK(cfg.beam.kappa0 == 1.5);
}

TEST_CASE("configuration errors name the field") {
    SUBCASE("missing width") {
        const auto e = config_error([] { parse_config(replace(kSingle, "beam.sigma_kappa_ratio = 0.2\n", "")); });
        CHECK(e.field() == "beam.sigma_kappa");
        CHECK(std::string(e.what()).find("beam.sigma_kappa") != std::string::npos);
    }
    SUBCASE("unknown key with line") {
        const auto e = config_error([] { parse_config(std::string(kSingle) + "beam.colour = red\n"); });
        CHECK(e.field() == "beam.colour");
        CHECK(e.line() == 16);
    }
    SUBCASE("duplicate key") {
        const auto e = config_error([] { parse_config(std::string(kSingle) + "beam.m = 2\n"); });
        CHECK(e.field() == "beam.m");
    }
    SUBCASE("bad unit") {
        const auto e = config_error([] { parse_config(replace(kSingle, "target.b = 0 a0", "target.b = 3 deg")); });
        CHECK(e.field() == "target.b");
    }
    SUBCASE("both momentum forms") {
        const auto e = config_error([] { parse_config(std::string(kSingle) + "beam.energy = 1 keV\n"); });
        CHECK(e.field() == "beam.energy");
    }
    SUBCASE("observable and target mismatch") {
        CHECK(config_error([] { parse_config(replace(kMacroscopic, "observable = dcs", "observable = events")); })
                  .field() == "observable");
        CHECK(config_error([] { parse_config(replace(kMacroscopic, "observable = dcs", "observable = ratio_r")); })
                  .field() == "target.kind");
        CHECK(config_error([] { parse_config(replace(kMacroscopic, "observable = dcs", "observable = asymmetry")); })
                  .field() == "superposition");
    }
    SUBCASE("closed method needs a central single potential") {
        const auto text = replace(replace(kSingle, "target.b = 0 a0", "target.b = 1 a0"), "observable = events",
                                  "observable = events\nmethod = closed");
        CHECK(config_error([&] { parse_config(text); }).field() == "method");
    }
    SUBCASE("unnormalised superposition") {
        const std::string text = std::string(kMacroscopic) + "superposition.m1 = 0\nsuperposition.m2 = 2\n"
                                                              "superposition.c1 = 0.5\nsuperposition.c2 = 0.5\n";
        CHECK(config_error([&] { parse_config(replace(text, "method = closed", "method = wide")); }).field() ==
              "superposition.c2");
    }
    SUBCASE("malformed line") {
        CHECK(config_error([] { parse_config("observable\n"); }).line() == 1);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/dir/x.cfg"), IoError);
}

TEST_CASE("canonical text round-trips and the hash tracks content") {
    for (const auto* text : {kMacroscopic, kSingle}) {
        const auto cfg = parse_config(text);
        const auto again = parse_config(to_text(cfg));
        CHECK(to_text(again) == to_text(cfg));
        CHECK(scenario_hash(again) == scenario_hash(cfg));
        CHECK(scenario_hash(cfg).size() == 16);
    }
    auto cfg = parse_config(kMacroscopic);
    const auto h = scenario_hash(cfg);
    cfg.output_path = "elsewhere.csv";
    cfg.format = OutputFormat::json;
    CHECK(scenario_hash(cfg) == h);
    cfg.beam.p_i = 11.0;
    CHECK(scenario_hash(cfg) != h);
}

TEST_CASE("presets") {
    CHECK(preset_names().size() == 6);
    CHECK(preset("fig1").size() == 6);
    const auto fig5 = preset("fig5");
    int ratio = 0, dens = 0;
    for (const auto& c : fig5) (c.observable == Observable::ratio_r ? ratio : dens) += 1;
    CHECK(ratio == 4);
    CHECK(dens == 4);
    for (const auto& c : preset("fig6")) CHECK(c.beam.sigma_kappa == approx(1.0 / (2.0 * units::kBohrPerNm)));
    CHECK(preset("fig4").size() == 10);
    CHECK_THROWS_AS(preset("fig7"), UnknownPreset);
    for (const auto& name : preset_names())
        for (const auto& c : preset(name)) CHECK_NOTHROW(validate(c));
}

TEST_CASE("run_scenario output") {
    SUBCASE("forward dip in the fig3 preset") {
        for (const auto& cfg : preset("fig3")) {
            if (cfg.name != "fig3_b0_m1") continue;
            const auto table = run_scenario(cfg, 2);
            double peak = 0.0;
            for (const auto& r : table.rows) peak = std::max(peak, r.value);
            CHECK(table.rows.front().theta_deg == 0.0);
            CHECK(table.rows.front().value < 1e-12 * peak);
            CHECK(table.all_converged());
        }
    }
    SUBCASE("total cross section") {
        auto cfg = parse_config(replace(replace(kMacroscopic, "observable = dcs", "observable = total"),
                                        "beam.theta_k = 15 deg", "beam.theta_k = 30 deg"));
        const auto table = run_scenario(cfg);
        REQUIRE(table.rows.size() == 1);
        const auto beam = cfg.beam_spec();
        CHECK(table.rows[0].value ==
              approx(plane_wave_total(Hydrogen1s{}, beam.p_f()).value / std::cos(30 * kDeg)).epsilon(1e-3));
    }
    SUBCASE("grid order and thread independence") {
        const auto cfg = parse_config(kSingle);
        const auto one = run_scenario(cfg, 1);
        const auto four = run_scenario(cfg, 4);
        REQUIRE(one.rows.size() == 15);
        CHECK(one.rows[1].phi_deg == approx(45.0));
        CHECK(one.rows[3].theta_deg == approx(5.0));
        CHECK(csv_of(one) == csv_of(four));
        CHECK(csv_of(one) == csv_of(run_scenario(cfg, 3)));
    }
    SUBCASE("phi0 normalisation") {
        auto cfg = parse_config(replace(std::string(kSingle) + "output.normalize = phi0\n", "target.b = 0 a0", "target.b = 2 a0"));
        const auto table = run_scenario(cfg);
        for (std::size_t i = 0; i < table.rows.size(); i += 3) CHECK(table.rows[i].value == approx(1.0));
        CHECK(table.normalization == "phi0");
    }
}

TEST_CASE("table serialisation") {
    const auto cfg = parse_config(kSingle);
    const auto table = run_scenario(cfg);
    const auto csv = csv_of(table);
    for (const char* key : {"# scenario: single", "# scenario_hash: ", "# units: ", "# tolerance: ", "# code_version: ",
                            "theta_deg,phi_deg,value,converged,nodes"})
        CHECK(csv.find(key) != std::string::npos);
    CHECK(csv.find(scenario_hash(cfg)) != std::string::npos);
    std::ostringstream js;
    write_json(table, js);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["metadata"]["scenario_hash"] == scenario_hash(cfg));
    REQUIRE(doc["records"].size() == table.rows.size());
    CHECK(doc["records"][4]["value"].get<double>() == table.rows[4].value);
    CHECK(doc["records"][4]["theta_deg"].get<double>() == table.rows[4].theta_deg);
}

TEST_CASE("worker count from the environment") {
    ::setenv("VORTEX_BORN_JOBS", "3", 1);
    CHECK(default_jobs() == 3);
    ::setenv("VORTEX_BORN_JOBS", "zero", 1);
    CHECK_THROWS_AS(default_jobs(), ConfigError);
    ::unsetenv("VORTEX_BORN_JOBS");
    CHECK(default_jobs() >= 1);
}

TEST_CASE("least-squares slope") {
    CHECK(fit_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == approx(2.0));
    CHECK_THROWS(fit_slope({1.0}, {2.0}));
}

TEST_SUITE("slow") {
    TEST_CASE("selfcheck battery") {
        const auto results = selfcheck();
        CHECK(results.size() >= 10);
        for (const auto& r : results) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.passed);
        }
        SUBCASE("an injected fault is caught by the matching check only") {
            const auto faulty = selfcheck(SelfcheckHooks{1.001});
            for (const auto& r : faulty) {
                INFO(r.name);
                CHECK(r.passed == (r.name != "Yukawa macroscopic closed form vs quadrature"));
            }
        }
    }
}
