#pragma once

#include <stdexcept>
#include <string>

namespace zzq {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed construction input (bad graph, n < 2, non-prime modulus).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Label that does not parse or does not name a module over the given algebra.
class InvalidLabel : public Error {
 public:
  using Error::Error;
};

/// Operation requested on an algebra kind that does not support it.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition (shape mismatch, mixed algebras, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class UndecidableDecomposition : public Error {
 public:
  using Error::Error;
};

class UndecidableIsomorphism : public Error {
 public:
  using Error::Error;
};

/// A resolution was truncated before the requested homological degree.
class InsufficientDepth : public Error {
 public:
  using Error::Error;
};

/// Generation closure stalled while some Hom spaces were only sampled.
class IndeterminateFullness : public Error {
 public:
  using Error::Error;
};

}  // namespace zzq
