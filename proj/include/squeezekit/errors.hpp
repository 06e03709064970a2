#pragma once

#include <stdexcept>
#include <string>

namespace squeezekit {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, parameter out of range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A point is not where the operation needs it (e.g. outside the open domain).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A domain spec is missing a constant that the operation requires.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// The operation is not implemented for this domain or automorphism variant.
class UnsupportedVariant : public Error {
 public:
  using Error::Error;
};

class SamplingFailure : public Error {
 public:
  using Error::Error;
};

class OptimizationFailure : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of a statement being verified does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A supplied certificate (embedding, disc) does not certify what it claims.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace squeezekit
