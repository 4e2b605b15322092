#pragma once

#include <stdexcept>
#include <string>

namespace thsplines {

/// Raised when inputs violate a mathematical precondition (bad knots, order,
/// out-of-domain samples, rank deficiency). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cost guard for the factorial-growth reference formulas.
class OrderTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

class RankDeficient : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed text input (knot lists, generator syntax, CSV files).
class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace thsplines
