#pragma once

#include <stdexcept>
#include <string>

namespace macmahon {

/// Raised when a caller breaks an operation's precondition
/// (dimension mismatch, unknown family, point outside the dilate, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails. Seeing one of these
/// means a bug in this library, never bad input.
class InternalDefect : public std::logic_error {
 public:
  explicit InternalDefect(const std::string& what) : std::logic_error(what) {}
};

}  // namespace macmahon
