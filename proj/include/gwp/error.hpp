#pragma once

#include <stdexcept>
#include <string>

namespace gwp {

/// Malformed input: bad labels, cyclic posets, domain mismatches, parse errors.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or materialization would exceed the configured desk guard.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A randomized search ran out of attempts.
class BudgetExhausted : public std::runtime_error {
public:
  BudgetExhausted(const std::string& what, std::size_t attempts)
      : std::runtime_error(what), attempts_(attempts) {}

  std::size_t attempts() const { return attempts_; }

private:
  std::size_t attempts_;
};

} // namespace gwp
