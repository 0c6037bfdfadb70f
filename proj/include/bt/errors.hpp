#pragma once

#include <stdexcept>
#include <string>

namespace bt {

/// Base of every error raised by the library. `kind()` is the stable,
/// machine-readable name used in CLI error JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

/// Malformed input: bad literal, bad JSON, violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidInput"; }
};

/// An enveloped symbol exceeded its declared bound C*exp(delta*r^2).
class EnvelopeViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "EnvelopeViolation"; }
};

/// A moment integral of the symbol diverges (symbol outside L1_inf),
/// or convergence cannot be certified from the declared envelope.
class DivergentMoment : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DivergentMoment"; }
};

/// Operand lies outside the natural domain or outside class P.
class DomainViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainViolation"; }
};

/// Quadrature with Q and 2Q radial nodes disagreed beyond tolerance.
class NonConvergent : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NonConvergent"; }
};

}  // namespace bt
