#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Bad caller input: out-of-range parameters, non-normalized states, unknown options.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's precondition does not hold (series not divisible, not enough
/// parameters or block coverage). Usually an indexing bug upstream.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A sieve or zero pattern that the construction guarantees was not observed.
class StructureViolation : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Floating-point computation left the admissible region.
class NumericalBreakdown : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace riesz
