#pragma once

#include <stdexcept>
#include <string>

namespace vborn {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result would not be representable as a finite double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Requested accuracy cannot be reached inside the evaluation cap.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario configuration rejected at load time. Carries the offending
/// field and, when known, the 1-based source line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, std::string message, int line = 0)
        : std::runtime_error(format(field, message, line)),
          field_(std::move(field)),
          line_(line) {}

    const std::string& field() const noexcept { return field_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& field, const std::string& message, int line) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += field + ": ";
        return out + message;
    }

    std::string field_;
    int line_;
};

/// Output could not be written or input could not be read.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownPreset : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace vborn
