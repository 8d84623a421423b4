#pragma once

#include <stdexcept>
#include <string>

namespace fcx {

/// Bad input: malformed parameters, unknown ids, violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hard size cap was exceeded (n, q, L, max_edges, chain length, SNF size).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. `witness` holds a serialized (JSON) failing
/// object when one is available.
class InvariantBreach : public std::logic_error {
 public:
  explicit InvariantBreach(const std::string& what, std::string witness = {})
      : std::logic_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace fcx
