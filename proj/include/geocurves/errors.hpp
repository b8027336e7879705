#pragma once

#include <stdexcept>
#include <string>

namespace geocurves {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed inputs: wrong sizes, mismatched spaces, invalid points, bad arguments.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Geometrically invalid requests: antipodal pairs, parameters outside the
/// geodesic domain, rotation angles at the principal-log cut.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Iterative solver failed to reach its tolerance.
class SolverError : public Error {
public:
    using Error::Error;
};

} // namespace geocurves
