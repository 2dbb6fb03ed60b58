#pragma once

#include <stdexcept>
#include <string>

namespace ptwh {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid qubit index, role, side, or register-size mismatch.
class LayoutError : public Error {
public:
    using Error::Error;
};

/// Non-finite entries, overflow, or other floating-point trouble.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Invalid model parameters (e.g. N too small for quartic terms).
class ModelError : public Error {
public:
    using Error::Error;
};

/// Eigensolver failure; message carries the diagnostics.
class SpectralError : public Error {
public:
    using Error::Error;
};

/// Bisection bracket does not straddle the phase transition.
class BracketError : public Error {
public:
    using Error::Error;
};

/// Request outside the perturbative regime of a closed-form expansion.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Not enough data points for a requested fit.
class FitError : public Error {
public:
    using Error::Error;
};

/// Finite-difference step does not converge under halving.
class StepError : public Error {
public:
    using Error::Error;
};

/// Mismatched grids between ensemble members.
class GridError : public Error {
public:
    using Error::Error;
};

/// Invalid sample values for a statistical fit.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace ptwh
