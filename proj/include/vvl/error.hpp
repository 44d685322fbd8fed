#pragma once

#include <stdexcept>
#include <string>

namespace vvl {

// Thrown when a domain description is malformed (inverted bounds, NaN geometry).
struct InvalidDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when two fields or grids that must coincide do not.
struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested at t = 0 where a kernel is singular, or outside a
// signal's time domain.
struct SingularTimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Implicit step failure; carries the offending time index.
struct SolverError : std::runtime_error {
    SolverError(const std::string& what, int time_index)
        : std::runtime_error(what + " (time index " + std::to_string(time_index) + ")"),
          time_index(time_index) {}
    int time_index;
};

// Explicit reference solver refusing an unstable instance.
struct StabilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSeriesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace vvl
