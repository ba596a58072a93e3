#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbor {

/// Malformed bracket notation. `position()` is the 0-based offset of the
/// offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operand lies outside the domain of an operation (e.g. a 0-edge tree as
/// the left operand of an insertion).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request would exceed a configured size bound.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal algebraic invariant was violated. Never the caller's fault.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arbor
