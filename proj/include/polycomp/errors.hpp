#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycomp {

// Invalid configuration, genome, network or file content. Messages name the
// offending field and the violated constraint.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problem container too large for the requested operation (e.g. TPM over 2^n states).
class CapacityError : public ConfigError {
public:
    explicit CapacityError(const std::string& msg) : ConfigError(msg) {}
};

// Requested item not present (unrecorded particle, unknown column, ...).
class LookupError : public std::runtime_error {
public:
    explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integration produced a non-finite position or velocity.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& msg, std::int64_t step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step_(step) {}
    std::int64_t step() const { return step_; }

private:
    std::int64_t step_;
};

// Filesystem / IO failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polycomp
