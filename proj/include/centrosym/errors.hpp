#pragma once

#include <stdexcept>
#include <string>

namespace centro {

/// Malformed arguments: shape mismatches, bad orders, unclassified inputs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that has no answer in the domain (singular Cauchy
/// sums, zero diagonal entries, no real root).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result would exceed the configured entry cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A structural identity that must hold exactly did not verify numerically.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace centro
