#pragma once

#include <stdexcept>
#include <string>

namespace harmcert {

/// A precondition on the arguments of a call was violated.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value fell outside the mathematical domain of an operation
/// (division by zero, logarithm of a non-positive number, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested working precision exceeds what a constant or routine can
/// certify. Precision escalation treats this as exhaustion.
class PrecisionLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace harmcert
