#pragma once

#include <stdexcept>
#include <string>

namespace spinim {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed JSON or wrong document shape.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input data violating a structural invariant (non-symmetric shape operator,
/// metric-incompatible Christoffel array, mixed complex eta, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation that needs a non-vanishing base spinor got (numerically) zero.
class ZeroSpinorError : public Error {
public:
    using Error::Error;
};

/// The Ricci tensor is not of the form lambda*g + eta*(xi (x) xi).
class NotEtaEinsteinError : public Error {
public:
    using Error::Error;
};

/// The eta-Einstein coefficient vanishes (Einstein metric): the eigenvalue
/// system for shape-operator candidates is not applicable.
class EtaZeroError : public Error {
public:
    using Error::Error;
};

/// A hypothesis required by an operation does not hold within tolerance
/// (e.g. Dirac or norm residual too large before shape reconstruction).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A built-in convention self-check failed; the build is considered broken.
class CalibrationError : public Error {
public:
    using Error::Error;
};

} // namespace spinim
