#pragma once

#include <stdexcept>
#include <string>

namespace ncqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical parameters or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an API contract (dimension mismatch, bad index, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input data failed a structural check (e.g. a non-Hermitian Hamiltonian).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The Fock cutoff is too small for the requested state or evaluation point.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A series or iterative evaluation ran out of budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Floating-point failure inside a numerical kernel.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Two analytic routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Post-measurement state is undefined (outcome has vanishing probability).
class MeasurementError : public Error {
 public:
  using Error::Error;
};

/// The oscillator construction needs omega > 0.
class DegenerateOscillatorError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace ncqm
