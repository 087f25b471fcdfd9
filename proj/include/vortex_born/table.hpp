#pragma once

// Result tables and their CSV / JSON serialisations.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace vborn {

struct TableRow {
    double radius_a0 = 0.0;  // only meaningful when the table has a radius axis
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double value = 0.0;
    bool converged = true;
    std::int64_t nodes = 0;
    bool degenerate = false;
    bool regime_warning = false;
};

struct AngularTable {
    std::string scenario;
    std::string scenario_hash;
    std::string value_kind;  // events_per_sr, dcs_a0^2_per_sr, ratio, asymmetry, density, total_a0^2
    std::string unit_system = "hartree atomic units (angles in degrees)";
    std::string normalization = "none";
    double tolerance = 0.0;
    std::string code_version;
    bool has_radius = false;
    std::vector<TableRow> rows;

    bool all_converged() const;
    std::size_t regime_warnings() const;
};

/// "# key: value" metadata lines, then theta_deg,phi_deg,value,converged,nodes
/// (preceded by radius_a0 for radius sweeps).
void write_csv(const AngularTable& table, std::ostream& out);

/// {"metadata": {...}, "records": [{...}, ...]}
void write_json(const AngularTable& table, std::ostream& out);

}  // namespace vborn
