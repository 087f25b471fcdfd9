#pragma once

// Scenario configuration: a flat "key = value" text format with dotted keys
// and unit-suffixed values, e.g.
//
//   beam.p_i        = 10 /a0
//   beam.theta_k    = 15 deg
//   beam.sigma_kappa_ratio = 0.01
//   potential.kind  = hydrogen
//   target.kind     = macroscopic
//   observable      = dcs
//
// Everything is converted to atomic units at load time. Unknown and
// duplicate keys are rejected.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vortex_born/beams.hpp"
#include "vortex_born/potentials.hpp"
#include "vortex_born/quadrature.hpp"
#include "vortex_born/scattering.hpp"

namespace vborn {

enum class Observable { events, dcs, ratio_r, asymmetry, density, total };
enum class TargetModel { exact, large_target };
enum class Normalize {
    none,
    phi0,   // divide by the value at phi_min of the same theta (and radius)
    axis0,  // divide by the m = 0 density on the axis (density only)
};
enum class OutputFormat { csv, json };

/// Inclusive sampling of [min, max] with `points` equally spaced values.
struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int points = 1;

    double at(int i) const { return points == 1 ? min : min + (max - min) * double(i) / double(points - 1); }
};

struct SuperpositionFields {
    int m1 = 0;
    int m2 = 0;
    double c1 = 1.0;
    double c2 = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

struct ScenarioConfig {
    std::string name = "scenario";
    BeamParams beam;
    PotentialSpec potential = Hydrogen1s{};
    TargetSpec target = Macroscopic{};
    TargetModel model = TargetModel::exact;
    std::optional<SuperpositionFields> superposition;
    GridAxis theta;  // radians
    GridAxis phi;    // radians
    std::optional<GridAxis> radius;  // a0; sweeps b, b0 or r_perp
    Observable observable = Observable::dcs;
    Method method = Method::automatic;
    QuadratureBudget budget{1e-6, 1e-14, std::int64_t{1} << 20};
    Normalize normalize = Normalize::none;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;

    BeamSpec beam_spec() const { return BeamSpec(beam); }
    SuperpositionSpec superposition_spec() const;
};

/// Parses and validates configuration text. `source` only labels messages.
/// Throws ConfigError carrying the field name and line.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a file. IoError if it cannot be read.
ScenarioConfig load_config(const std::string& path);

/// Cross-field validation (observable vs target, method availability, grid
/// ranges). parse_config calls this; presets and bindings may too.
void validate(const ScenarioConfig& cfg);

/// Canonical text in atomic units; parse_config(to_text(c)) reproduces c.
std::string to_text(const ScenarioConfig& cfg);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string scenario_hash(const ScenarioConfig& cfg);

std::string_view to_string(Observable o);
std::string_view to_string(Method m);
std::string_view to_string(Normalize n);
std::string_view to_string(OutputFormat f);

/// Formats a double with the shortest round-trip representation.
std::string format_number(double x);

}  // namespace vborn
