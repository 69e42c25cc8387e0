#pragma once

#include <stdexcept>
#include <string>

namespace pgcert {

/// Syntactic violation of the presentation invariants (prime, weights, exponent ranges).
class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to enumerate more elements than its configured bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Caller-side precondition failure, e.g. a subgroup that must be normal is not.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Something that must hold by construction did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A table handed to phi_realize does not satisfy the cocycle identity.
class DerivationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pgcert
