#pragma once

#include <stdexcept>
#include <string>

namespace eqk {

/// Caller violated an operation's precondition (non-dominant weight, missing invariance, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algebraic structure failed a required property (subgroup, closure, invariance).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Inverse of zero and similar field-level failures.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource cap (Weyl group size, iteration bound) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: datum files, polynomial expressions, torsion points.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqk
