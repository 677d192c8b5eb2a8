#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Division by zero, non-integral multiplicity request, c1 = 0 inversion.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Matrix or vector dimensions that do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Symbolic coefficients reached a routine that needs rational ones.
class SymbolicParameterError : public PreconditionError {
public:
    SymbolicParameterError() : PreconditionError("specialize parameters first") {}
};

/// Requested size lies beyond a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Completion hit its rule budget before converging.
class BudgetExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

/// An internal invariant failed; the result would be wrong.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace novikov
