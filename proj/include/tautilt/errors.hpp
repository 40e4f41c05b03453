#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed presentations, spec files, representation files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ShapeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotCoprime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonIntegerResult : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NontrivialFixedSpace : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InconsistentRankOne : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotQualifying : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class HolonomyZero : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An exhaustive search would exceed its hard cap; the oracle refuses to guess.
class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold for valid input was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tautilt
