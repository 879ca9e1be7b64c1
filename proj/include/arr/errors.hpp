#pragma once

#include <stdexcept>
#include <string>

namespace arr {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two operands live in ambient spaces of different dimension.
class AmbientMismatch : public Error {
public:
  using Error::Error;
};

// epsilon_sign was called on subsets that share an atom.
class OverlappingSubsets : public Error {
public:
  using Error::Error;
};

// Chain index outside 1..r for a maximal chain of length r.
class InvalidChainIndex : public Error {
public:
  using Error::Error;
};

// A diagnostic that assumes a geometric lattice was run on a non-geometric one.
class NotGeometric : public Error {
public:
  using Error::Error;
};

// An operation's stated precondition does not hold for this input.
class PreconditionFailed : public Error {
public:
  using Error::Error;
};

// Independently computed classification tests disagree on an applicable
// arrangement. This is an implementation bug, never a user error.
class DisagreementError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DuplicateSubspace : public Error {
public:
  using Error::Error;
};

// An input subspace equals the whole ambient space.
class AmbientSubspace : public Error {
public:
  using Error::Error;
};

// The reserved `offset` field was present: only central arrangements are accepted.
class NonCentralInput : public Error {
public:
  using Error::Error;
};

class TooManyAtoms : public Error {
public:
  using Error::Error;
};

}  // namespace arr
