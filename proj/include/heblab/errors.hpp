#pragma once

#include <stdexcept>
#include <string>

namespace heblab {

// Bad dimensions, invalid parameter values, malformed config files.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation (e.g. negative time).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// State left the finite range during integration; carries the failure time.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& msg, double t) : std::runtime_error(msg), time(t) {}
    double time;
};

// A location handed to classify() is not actually a fixed point.
class NotAFixedPointError : public std::runtime_error {
public:
    NotAFixedPointError(const std::string& msg, double residual)
        : std::runtime_error(msg), residual(residual) {}
    double residual;
};

// A pattern's Type-1 trial did not resolve, so it cannot be labeled.
class LabelingError : public std::runtime_error {
public:
    explicit LabelingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace heblab
