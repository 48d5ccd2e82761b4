#pragma once

#include <stdexcept>
#include <string>

namespace relmat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Construction-time invariant violations (bad labels, malformed families, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Element or subset does not belong to the expected universe.
struct DomainError : Error {
    using Error::Error;
};

/// An operation's stated precondition does not hold (e.g. a partition was
/// requested for a relation that is not an equivalence relation).
struct PreconditionError : Error {
    using Error::Error;
};

/// The universe is too large for an exhaustive computation.
struct CapacityError : Error {
    using Error::Error;
};

/// Malformed input file or JSON document.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace relmat
