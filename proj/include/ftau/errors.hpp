#pragma once

#include <stdexcept>
#include <string>

namespace ftau {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Sample space with zero outcomes.
class EmptySpaceError : public Error {
 public:
  using Error::Error;
};

// Operands reference different sample spaces (or different time axes).
class MixedSpacesError : public Error {
 public:
  using Error::Error;
};

// Blocks are empty, overlap, or fail to cover the space.
class NotAPartitionError : public Error {
 public:
  using Error::Error;
};

// Explicit event list fails a sigma-algebra closure check.
class NotASigmaAlgebraError : public Error {
 public:
  using Error::Error;
};

// Explicit enumeration would exceed the configured atom bound.
class TooManyAtomsError : public Error {
 public:
  using Error::Error;
};

// A time value is neither on the axis nor infinity.
class TimeNotOnAxisError : public Error {
 public:
  using Error::Error;
};

// Filtration levels do not refine over time.
class InvalidFiltrationError : public Error {
 public:
  using Error::Error;
};

// The random-time map violates the measurability condition.
class NotAStoppingTimeError : public Error {
 public:
  using Error::Error;
};

// Generator configuration out of range.
class BadConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed instance file (syntax or schema).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An outcome label not declared in the sample space.
class UnknownLabelError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A later filtration level fails to refine an earlier one.
class NonRefiningError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace ftau
