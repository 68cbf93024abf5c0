#pragma once

#include <stdexcept>
#include <string>

namespace zaremba {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad range, bad enum, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NonpositiveTime : public DomainError {
public:
    explicit NonpositiveTime(double t);
};

class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedGeometry : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidBracket : public DomainError {
public:
    InvalidBracket(double lo, double hi, double f_lo, double f_hi);
};

/// Adaptive quadrature ran out of refinement depth. Carries the best
/// estimate and its error bound so callers can decide what to do with it.
class NonConvergence : public Error {
public:
    NonConvergence(double estimate, double error_bound);

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// A result is not representable in double precision (e.g. e^{z^2} for
/// large negative z in the scaled complementary error function).
class Overflow : public Error {
public:
    using Error::Error;
};

/// The spectral enumeration failed one of its completeness checks.
class IncompleteEnumeration : public Error {
public:
    using Error::Error;
};

} // namespace zaremba
