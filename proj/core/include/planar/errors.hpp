#pragma once

#include <stdexcept>
#include <string>

namespace planar {

// Root of every error thrown by the library. Each subclass corresponds to a
// distinct failure the CLI maps onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad inclusion data, bad JSON, bad program text.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidInclusion : public InputError {
 public:
  using InputError::InputError;
};

class InvalidAutomorphism : public InputError {
 public:
  using InputError::InputError;
};

class InvalidProgram : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical precondition on otherwise well-formed input does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotMarkov : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotAbelian : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegreeMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Scalar operations outside the representable fragment.
class NotRepresentable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotInvertible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

// Raised when an identity that must hold on valid input fails. Seeing one of
// these means there is a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class EigenvectorViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace planar
