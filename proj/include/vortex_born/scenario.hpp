#pragma once

// Scenario evaluation on angular / radial grids, figure presets and the
// self-check battery behind `vortex-born selfcheck`.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vortex_born/config.hpp"
#include "vortex_born/table.hpp"

namespace vborn {

std::string_view code_version();

/// Worker count from VORTEX_BORN_JOBS, else the hardware concurrency (>= 1).
/// Throws ConfigError for a malformed variable.
int default_jobs();

/// Evaluates every grid point with up to `jobs` threads. Rows come out in grid
/// order (radius, then theta, then phi) regardless of completion order.
AngularTable run_scenario(const ScenarioConfig& cfg, int jobs = 1);

/// Preset names: fig1 ... fig6.
std::vector<std::string> preset_names();

/// One config per curve of the named figure. Throws UnknownPreset.
std::vector<ScenarioConfig> preset(std::string_view name);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fault injection for testing the battery itself.
struct SelfcheckHooks {
    // Multiplies the Yukawa macroscopic closed form before comparison.
    double yukawa_closed_scale = 1.0;
};

std::vector<CheckResult> selfcheck(const SelfcheckHooks& hooks = {});

}  // namespace vborn
