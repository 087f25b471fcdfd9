#include "vortex_born/table.hpp"

#include <algorithm>

#include <json.hpp>

#include "vortex_born/config.hpp"

namespace vborn {

bool AngularTable::all_converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.converged; });
}

std::size_t AngularTable::regime_warnings() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.regime_warning; }));
}

void write_csv(const AngularTable& table, std::ostream& out) {
    out << "# scenario: " << table.scenario << '\n';
    out << "# scenario_hash: " << table.scenario_hash << '\n';
    out << "# value_kind: " << table.value_kind << '\n';
    out << "# units: " << table.unit_system << '\n';
    out << "# normalization: " << table.normalization << '\n';
    out << "# tolerance: " << format_number(table.tolerance) << '\n';
    out << "# code_version: " << table.code_version << '\n';
    out << "# regime_warnings: " << table.regime_warnings() << '\n';
    if (table.has_radius) out << "radius_a0,";
    out << "theta_deg,phi_deg,value,converged,nodes\n";
    for (const auto& r : table.rows) {
        if (table.has_radius) out << format_number(r.radius_a0) << ',';
        out << format_number(r.theta_deg) << ',' << format_number(r.phi_deg) << ',' << format_number(r.value) << ','
            << (r.converged ? 1 : 0) << ',' << r.nodes << '\n';
    }
}

void write_json(const AngularTable& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {
        {"scenario", table.scenario},
        {"scenario_hash", table.scenario_hash},
        {"value_kind", table.value_kind},
        {"units", table.unit_system},
        {"normalization", table.normalization},
        {"tolerance", table.tolerance},
        {"code_version", table.code_version},
        {"regime_warnings", table.regime_warnings()},
    };
    auto records = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json rec;
        if (table.has_radius) rec["radius_a0"] = r.radius_a0;
        rec["theta_deg"] = r.theta_deg;
        rec["phi_deg"] = r.phi_deg;
        rec["value"] = r.value;
        rec["converged"] = r.converged;
        rec["nodes"] = r.nodes;
        if (r.degenerate) rec["degenerate"] = true;
        if (r.regime_warning) rec["regime_warning"] = true;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    out << doc.dump(2) << '\n';
}

}  // namespace vborn
