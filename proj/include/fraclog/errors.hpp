#pragma once

#include <stdexcept>
#include <string>

namespace fraclog {

/// Argument outside the mathematical domain of an operation (poles, alpha out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result would not fit in a double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A series or expansion could not reach the requested accuracy.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved_bound_(achieved_bound) {}

    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// A candidate series diverges for the requested parameters.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Non-finite intermediate inside a solver.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent container shapes passed to an operation.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fraclog
