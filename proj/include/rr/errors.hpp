#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rr {

/// Invalid input to an operation: unknown element, mismatched variable count, bad modulus.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's precondition was violated (e.g. a cyclic order passed where a well-founded one is required).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A domain broke one of its own contracts (mntcrs returned a non-reducible element, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A step or iteration bound was exceeded.
class NonTerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rr
