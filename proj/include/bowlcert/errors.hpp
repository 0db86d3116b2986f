#pragma once

#include <stdexcept>
#include <string>

namespace bowlcert {

struct DivisionByIntervalContainingZero : std::domain_error {
    explicit DivisionByIntervalContainingZero(const std::string& what)
        : std::domain_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct ToleranceNotMet : std::runtime_error {
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct GridTooCoarse : std::runtime_error {
    explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct WindowViolation : std::runtime_error {
    explicit WindowViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bowlcert
