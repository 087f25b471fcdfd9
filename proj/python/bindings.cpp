#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vortex_born/config.hpp"
#include "vortex_born/scenario.hpp"
#include "vortex_born/special.hpp"

namespace py = pybind11;
using namespace vborn;

namespace {

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::automatic;
    if (name == "general") return Method::general;
    if (name == "wide") return Method::wide;
    if (name == "closed") return Method::closed;
    throw py::value_error("method must be one of auto, general, wide, closed");
}

py::dict estimate_dict(const Estimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["est_error"] = e.est_error;
    d["nodes"] = e.nodes_used;
    d["converged"] = e.converged;
    d["degenerate"] = e.degenerate;
    d["regime_warning"] = e.regime_warning;
    return d;
}

py::dict table_dict(const AngularTable& t) {
    py::dict meta;
    meta["scenario"] = t.scenario;
    meta["scenario_hash"] = t.scenario_hash;
    meta["value_kind"] = t.value_kind;
    meta["units"] = t.unit_system;
    meta["normalization"] = t.normalization;
    meta["tolerance"] = t.tolerance;
    meta["code_version"] = t.code_version;
    py::list rows;
    for (const auto& r : t.rows) {
        py::dict row;
        if (t.has_radius) row["radius_a0"] = r.radius_a0;
        row["theta_deg"] = r.theta_deg;
        row["phi_deg"] = r.phi_deg;
        row["value"] = r.value;
        row["converged"] = r.converged;
        row["nodes"] = r.nodes;
        rows.append(row);
    }
    py::dict out;
    out["metadata"] = meta;
    out["records"] = rows;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Born scattering of twisted electron wave-packets (atomic units)";
    m.attr("__version__") = std::string(code_version());

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<UnknownPreset>(m, "UnknownPreset", PyExc_KeyError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

    py::class_<QuadratureBudget>(m, "Budget")
        .def(py::init([](double rel_tol, double abs_tol, std::int64_t max_nodes) {
                 QuadratureBudget b{rel_tol, abs_tol, max_nodes};
                 b.validate();
                 return b;
             }),
             py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14, py::arg("max_nodes") = std::int64_t{1} << 20)
        .def_readonly("rel_tol", &QuadratureBudget::rel_tol)
        .def_readonly("abs_tol", &QuadratureBudget::abs_tol)
        .def_readonly("max_nodes", &QuadratureBudget::max_nodes);

    py::class_<BeamSpec>(m, "Beam")
        .def(py::init([](double kappa0, double sigma_kappa, double p_i, int m, double n_electrons) {
                 return BeamSpec(BeamParams{kappa0, sigma_kappa, p_i, m, n_electrons});
             }),
             py::arg("kappa0"), py::arg("sigma_kappa"), py::arg("p_i"), py::arg("m") = 0, py::arg("n_electrons") = 1.0)
        .def_static("from_opening_angle", &BeamSpec::from_opening_angle, py::arg("theta_k"), py::arg("p_i"),
                    py::arg("sigma_kappa"), py::arg("m") = 0)
        .def_property_readonly("kappa0", &BeamSpec::kappa0)
        .def_property_readonly("sigma_kappa", &BeamSpec::sigma_kappa)
        .def_property_readonly("p_i", &BeamSpec::p_i)
        .def_property_readonly("p_f", &BeamSpec::p_f)
        .def_property_readonly("theta_k", &BeamSpec::theta_k)
        .def_property_readonly("m", &BeamSpec::m)
        .def_property_readonly("n_electrons", &BeamSpec::n_electrons)
        .def_property_readonly("norm", &BeamSpec::norm)
        .def("with_m", &BeamSpec::with_m)
        .def("__repr__", [](const BeamSpec& b) {
            std::ostringstream s;
            s << "Beam(kappa0=" << b.kappa0() << ", sigma_kappa=" << b.sigma_kappa() << ", p_i=" << b.p_i()
              << ", m=" << b.m() << ")";
            return s.str();
        });

    py::class_<Yukawa>(m, "Yukawa")
        .def(py::init<double, double>(), py::arg("v0") = 1.0, py::arg("mu") = 1.0)
        .def_readonly("v0", &Yukawa::v0)
        .def_readonly("mu", &Yukawa::mu);
    py::class_<Hydrogen1s>(m, "Hydrogen1s")
        .def(py::init<double>(), py::arg("a0") = 1.0)
        .def_readonly("a0", &Hydrogen1s::a0);

    const QuadratureBudget defaults{};

    m.def("bessel_j", &bessel_j, py::arg("m"), py::arg("x"));
    m.def("bessel_i0", &bessel_i0, py::arg("x"));
    m.def(
        "kernel_im",
        [](int power, int mm, double alpha, double beta, double kb, double chi, const QuadratureBudget& budget) {
            return kernel_im({power, mm, alpha, beta, kb, chi}, budget).value;
        },
        py::arg("power"), py::arg("m"), py::arg("alpha"), py::arg("beta"), py::arg("kb") = 0.0, py::arg("chi") = 0.0,
        py::arg("budget") = defaults);

    m.def("born_amplitude", &born_amplitude, py::arg("potential"), py::arg("q2"));
    m.def("plane_wave_dcs", &plane_wave_dcs, py::arg("potential"), py::arg("p"), py::arg("theta"));
    m.def(
        "plane_wave_total",
        [](const PotentialSpec& pot, double p, const QuadratureBudget& b) { return plane_wave_total(pot, p, b).value; },
        py::arg("potential"), py::arg("p"), py::arg("budget") = defaults);

    m.def(
        "density", [](const BeamSpec& beam, double r, const QuadratureBudget& b) { return density(beam, r, b).value; },
        py::arg("beam"), py::arg("r_perp"), py::arg("budget") = defaults);
    m.def(
        "luminosity", [](const BeamSpec& beam, const QuadratureBudget& b) { return luminosity(beam, b).value; },
        py::arg("beam"), py::arg("budget") = defaults);

    m.def(
        "events_single",
        [](const BeamSpec& beam, const PotentialSpec& pot, double b, double phi_b, double theta, double phi,
           const QuadratureBudget& budget) {
            return estimate_dict(events_single(beam, pot, {b, phi_b}, {theta, phi}, budget));
        },
        py::arg("beam"), py::arg("potential"), py::arg("b"), py::arg("phi_b"), py::arg("theta"), py::arg("phi") = 0.0,
        py::arg("budget") = defaults);
    m.def(
        "dcs_macroscopic",
        [](const BeamSpec& beam, const PotentialSpec& pot, double theta, const std::string& method,
           const QuadratureBudget& budget) {
            return estimate_dict(dcs_macroscopic(beam, pot, {theta, 0.0}, parse_method(method), budget));
        },
        py::arg("beam"), py::arg("potential"), py::arg("theta"), py::arg("method") = "closed",
        py::arg("budget") = defaults);
    m.def(
        "total_macroscopic",
        [](const BeamSpec& beam, const PotentialSpec& pot, const std::string& method, const QuadratureBudget& budget) {
            return estimate_dict(total_macroscopic(beam, pot, parse_method(method), budget));
        },
        py::arg("beam"), py::arg("potential"), py::arg("method") = "closed", py::arg("budget") = defaults);
    m.def(
        "asymmetry_a",
        [](const BeamSpec& beam, const PotentialSpec& pot, int m1, int m2, double c1, double c2, double theta,
           const QuadratureBudget& budget) {
            const SuperpositionSpec sup{beam, m1, m2, c1, c2, 0.0, 0.0};
            sup.validate();
            return estimate_dict(asymmetry_a(sup, pot, theta, budget));
        },
        py::arg("beam"), py::arg("potential"), py::arg("m1"), py::arg("m2"), py::arg("c1"), py::arg("c2"),
        py::arg("theta"), py::arg("budget") = defaults);
    m.def(
        "ratio_r",
        [](const BeamSpec& beam, double b0, double sigma_b, const QuadratureBudget& budget) {
            return estimate_dict(ratio_r(beam, {b0, 0.0, sigma_b}, budget));
        },
        py::arg("beam"), py::arg("b0"), py::arg("sigma_b"), py::arg("budget") = defaults);

    m.def(
        "run_config",
        [](const std::string& text, int jobs) {
            const auto cfg = parse_config(text);
            py::gil_scoped_release release;
            auto table = run_scenario(cfg, jobs);
            py::gil_scoped_acquire acquire;
            return table_dict(table);
        },
        py::arg("text"), py::arg("jobs") = 1, "Parse a scenario config and evaluate it; returns metadata and records.");
    m.def("preset_names", &preset_names);
    m.def(
        "preset_texts",
        [](const std::string& name) {
            std::vector<std::string> out;
            for (const auto& cfg : preset(name)) out.push_back(to_text(cfg));
            return out;
        },
        py::arg("name"), "Canonical config text of every curve of a figure preset.");
    m.def("selfcheck", [] {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : selfcheck()) out.emplace_back(r.name, r.passed, r.detail);
        return out;
    });
}
