#pragma once

#include <stdexcept>
#include <string>

namespace detloci {

/// Argument outside the mathematical domain of an operation
/// (zero vector, odd-dimensional plane, index out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition does not hold for otherwise well-formed input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point lies outside the standard affine chart of the grassmannian.
class OutsideChartError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace detloci
