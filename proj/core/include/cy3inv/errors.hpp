#pragma once

#include <stdexcept>
#include <string>

namespace cy3inv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in lattices of different ranks.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An argument is outside the operation's domain (zero class, m < 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Exact data that should have been integral (or mutually consistent) is not.
/// The message carries the offending rational as p/q.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

/// A document or value violates a structural invariant; the message names it.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Malformed input text; the message carries line/position where available.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace cy3inv
