#pragma once

#include <stdexcept>
#include <string>

namespace dialg {

// Malformed textual or structural input (bad node sets, unparsable strings).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands whose sizes or degrees do not chain.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A diagram that violates the block constraint of the family it is used in.
class FamilyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called outside its documented domain (e.g. factor_J on a diagram
// outside J, a lemma check below its bound).
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Desk-scale guard rail tripped.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructed witness or checked identity did not hold.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dialg
