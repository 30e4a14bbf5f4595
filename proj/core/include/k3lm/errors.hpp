#pragma once

#include <stdexcept>
#include <string>

namespace k3lm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, unparsable vector, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A lattice description that violates one of the Picard-lattice invariants.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// An operation called outside its mathematical domain (precondition failure).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Never swallowed: the result would be wrong.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace k3lm
