#pragma once

#include <stdexcept>
#include <string>

namespace closure {

// Bad sizes, mismatched fields vs grids, etc.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration values (unknown preset, M too small, unstable dt, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Rank-deficient or numerically singular linear systems.
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// NaN/Inf detected mid-run; carries enough context to locate the failure.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace closure
