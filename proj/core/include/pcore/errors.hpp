#pragma once

#include <stdexcept>
#include <string>

namespace pcore {

/// Non-conformable shapes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Out-of-range arguments (negative exponent, infeasible generator recipe, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem check was handed an instance outside its precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidProjectionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The requested inverse kind does not exist for the input (group or core
/// inverse of a matrix with index >= 2).
class NoInverseError : public std::domain_error {
public:
    NoInverseError(const std::string& kind, int index)
        : std::domain_error(kind + " inverse does not exist: index " +
                            std::to_string(index) + " exceeds 1"),
          index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

} // namespace pcore
