#pragma once

#include <stdexcept>
#include <string>

namespace stargraph {

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inadequate input (schema violations, precondition failures).
struct ValidationError : Error {
    using Error::Error;
};

/// A numerical procedure failed to meet its contract.
struct NumericError : Error {
    using Error::Error;
};

struct OrderTooHigh : ValidationError {
    using ValidationError::ValidationError;
};

struct RootFindingFailure : NumericError {
    using NumericError::NumericError;
};

struct NewtonDivergence : NumericError {
    using NumericError::NumericError;
};

struct RootCountMismatch : NumericError {
    using NumericError::NumericError;
};

struct InsufficientShells : ValidationError {
    using ValidationError::ValidationError;
};

struct SmallDenominator : NumericError {
    using NumericError::NumericError;
};

struct CaseDetectionAmbiguous : NumericError {
    using NumericError::NumericError;
};

struct ShellOverflow : ValidationError {
    using ValidationError::ValidationError;
};

struct SplitFailure : NumericError {
    using NumericError::NumericError;
};

}  // namespace stargraph
