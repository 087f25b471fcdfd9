// vortex-born: scenario runner, figure presets and self-check.
//
// Exit codes: 0 ok, 1 other failure, 2 configuration error, 3 some point did
// not converge (table still written), 4 I/O error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vortex_born/errors.hpp"
#include "vortex_born/scenario.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kUnconverged = 3, kIo = 4 };

struct Overrides {
    std::optional<int> jobs;
    std::optional<double> tol;
    std::optional<std::string> format;
};

void apply(const Overrides& o, vborn::ScenarioConfig& cfg) {
    if (o.tol) {
        if (!(*o.tol > 0.0)) throw vborn::ConfigError("--tol", "must be > 0");
        cfg.budget.rel_tol = *o.tol;
    }
    if (o.format) cfg.format = *o.format == "json" ? vborn::OutputFormat::json : vborn::OutputFormat::csv;
}

int resolve_jobs(const Overrides& o) {
    if (o.jobs) {
        if (*o.jobs < 1) throw vborn::ConfigError("--jobs", "must be >= 1");
        return *o.jobs;
    }
    return vborn::default_jobs();
}

void write_table(const vborn::AngularTable& table, vborn::OutputFormat format, std::ostream& out) {
    if (format == vborn::OutputFormat::json)
        vborn::write_json(table, out);
    else
        vborn::write_csv(table, out);
}

void write_table_file(const vborn::AngularTable& table, vborn::OutputFormat format, const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (!out) throw vborn::IoError("cannot open '" + path.string() + "' for writing");
    write_table(table, format, out);
    out.flush();
    if (!out) throw vborn::IoError("failed writing '" + path.string() + "'");
}

void report(const vborn::AngularTable& table) {
    std::size_t bad = 0;
    for (const auto& r : table.rows) bad += r.converged ? 0 : 1;
    if (bad) std::cerr << table.scenario << ": " << bad << " of " << table.rows.size() << " points did not converge\n";
    if (const auto w = table.regime_warnings())
        std::cerr << table.scenario << ": " << w << " points outside the asserted regime\n";
}

int cmd_run(const std::string& path, const Overrides& o) {
    auto cfg = vborn::load_config(path);
    apply(o, cfg);
    const auto table = vborn::run_scenario(cfg, resolve_jobs(o));
    if (cfg.output_path.empty()) {
        write_table(table, cfg.format, std::cout);
    } else {
        write_table_file(table, cfg.format, cfg.output_path);
    }
    report(table);
    return table.all_converged() ? kOk : kUnconverged;
}

int cmd_preset(const std::string& name, const std::string& out_dir, const Overrides& o) {
    const int jobs = resolve_jobs(o);
    bool converged = true;
    for (auto cfg : vborn::preset(name)) {
        apply(o, cfg);
        const auto table = vborn::run_scenario(cfg, jobs);
        const char* ext = cfg.format == vborn::OutputFormat::json ? ".json" : ".csv";
        const auto path = std::filesystem::path(out_dir) / (cfg.name + ext);
        write_table_file(table, cfg.format, path);
        std::cout << path.string() << '\n';
        report(table);
        converged = converged && table.all_converged();
    }
    return converged ? kOk : kUnconverged;
}

int cmd_selfcheck() {
    const auto start = std::chrono::steady_clock::now();
    const auto results = vborn::selfcheck();
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        ok = ok && r.passed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu checks, %s, %.1f s\n", results.size(), ok ? "all passed" : "FAILURES", secs);
    return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Born scattering of twisted electron wave-packets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vborn::code_version()));

    Overrides o;
    int jobs = 0;
    double tol = 0.0;
    std::string format;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--jobs", jobs, "worker threads (default: $VORTEX_BORN_JOBS or all cores)");
        sub->add_option("--tol", tol, "relative quadrature tolerance (overrides budget.rel_tol)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    };

    std::string config_path;
    auto* run = app.add_subcommand("run", "evaluate a scenario config");
    run->add_option("config", config_path, "config file")->required();
    add_common(run);

    std::string preset_name;
    std::string out_dir = ".";
    auto* pre = app.add_subcommand("preset", "regenerate the tables of one figure");
    pre->add_option("name", preset_name, "fig1 ... fig6")->required();
    pre->add_option("--out", out_dir, "output directory");
    add_common(pre);

    auto* check = app.add_subcommand("selfcheck", "run the built-in oracle battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    for (auto* sub : {run, pre}) {
        if (!sub->parsed()) continue;
        if (sub->count("--jobs")) o.jobs = jobs;
        if (sub->count("--tol")) o.tol = tol;
        if (sub->count("--format")) o.format = format;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, o);
        if (pre->parsed()) return cmd_preset(preset_name, out_dir, o);
        if (check->parsed()) return cmd_selfcheck();
    } catch (const vborn::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const vborn::UnknownPreset& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const vborn::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
