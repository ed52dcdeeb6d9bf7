#pragma once

#include <stdexcept>
#include <string>

namespace ptspectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user configuration (unknown preset, non-positive step, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation not available for the given input (e.g. no closed form).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to reach its target.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Non-finite state while integrating along a contour ray.
class IntegrationError : public NumericalError {
public:
    IntegrationError(const std::string& what, double r) : NumericalError(what), r_(r) {}
    double radius() const noexcept { return r_; }

private:
    double r_;
};

/// psi(0) vanished on one side, so the logarithmic derivative is singular.
class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Quadrature along a ray whose integrand does not decay.
class ContourDivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Quadrature refinement exhausted before reaching the tolerance.
class AccuracyError : public NumericalError {
public:
    AccuracyError(const std::string& what, double achieved) : NumericalError(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

} // namespace ptspectra
