#pragma once

#include <stdexcept>
#include <string>

namespace nk {

// Base of every error raised by the engine. Subclasses name the failure
// class so callers (and the CLI exit-code mapping) can tell a bad input
// apart from a broken internal invariant.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's precondition (non-dominant weight, bad tag...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Two independent computations that must agree did not.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

class NotACharacterError : public Error {
public:
  using Error::Error;
};

class MalformedEmbeddingError : public Error {
public:
  using Error::Error;
};

class FixtureError : public Error {
public:
  using Error::Error;
};

class EvennessError : public Error {
public:
  using Error::Error;
};

class IdentityViolation : public Error {
public:
  using Error::Error;
};

class UnexpectedSpectrum : public Error {
public:
  using Error::Error;
};

} // namespace nk
