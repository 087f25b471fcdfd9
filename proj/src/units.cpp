#include "vortex_born/units.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace vborn::units {

std::string_view dimension_name(Dimension d) {
    switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::length: return "length";
    case Dimension::inverse_length: return "inverse length";
    case Dimension::angle: return "angle";
    case Dimension::energy: return "energy";
    case Dimension::coupling: return "energy*length";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double unit_factor(std::string_view unit, Dimension dim) {
    switch (dim) {
    case Dimension::dimensionless:
        if (unit.empty()) return 1.0;
        break;
    case Dimension::length:
        if (unit.empty() || unit == "a0" || unit == "bohr" || unit == "au") return 1.0;
        if (unit == "nm") return kBohrPerNm;
        break;
    case Dimension::inverse_length:
        if (unit.empty() || unit == "/a0" || unit == "1/a0" || unit == "au") return 1.0;
        if (unit == "/nm" || unit == "1/nm") return 1.0 / kBohrPerNm;
        break;
    case Dimension::angle:
        if (unit.empty() || unit == "deg") return kDegree;
        if (unit == "rad") return 1.0;
        break;
    case Dimension::energy:
        if (unit.empty() || unit == "Ha" || unit == "hartree" || unit == "au") return 1.0;
        if (unit == "eV") return 1.0 / kHartreeEv;
        if (unit == "keV") return 1e3 / kHartreeEv;
        break;
    case Dimension::coupling:
        if (unit.empty() || unit == "au") return 1.0;
        break;
    }
    throw std::invalid_argument("unit '" + std::string(unit) + "' is not a valid " +
                                std::string(dimension_name(dim)) + " unit");
}

}  // namespace

double parse_quantity(std::string_view text, Dimension dim) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty value");
    double number = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
    if (ec != std::errc{}) throw std::invalid_argument("'" + std::string(text) + "' does not start with a number");
    const std::string_view unit = trim(std::string_view(end, text.data() + text.size() - end));
    return number * unit_factor(unit, dim);
}

}  // namespace vborn::units
