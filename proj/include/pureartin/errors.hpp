#pragma once

#include <stdexcept>
#include <string>

namespace pureartin {

/// Malformed or structurally incompatible input (mixed discriminants,
/// mismatched truncation orders, bad type names, out-of-range generators).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that was expected to be invertible over its ring is not.
class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A representation table or folding failed certification.
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data needed for a route (a representation table) is not available.
class MissingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation restricted to pure words received a non-pure one.
class NotPure : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Enumeration refused because the group is larger than the caller's cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pureartin
