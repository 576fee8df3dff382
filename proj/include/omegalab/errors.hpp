#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegalab {

// Caller asked for something malformed (bad flag value, bad prefix, ...).
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Work would exceed the configured enumeration limit.
class ResourceRefusal : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (Kraft sum above one, prefix collision, ...).
// Always a bug in this code, never a property of the input.
class InvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

class LedgerError : public std::runtime_error {
public:
  LedgerError(std::size_t line, const std::string& what)
      : std::runtime_error("ledger line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace omegalab
