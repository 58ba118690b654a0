#pragma once

#include <stdexcept>
#include <string>

namespace symtrack {

// Shape/precondition violations on tensor ops or model wiring.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// NaN/Inf escaped an op, or a numeric contract was violated (e.g. fully
// blocked softmax row, divergent training loss).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad run configuration: unknown keys, invalid values, incompatible shapes.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / serialization failures, including checkpoint integrity.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace symtrack
