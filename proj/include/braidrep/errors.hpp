#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

/// Bad input from the caller: malformed group spec, out-of-range index,
/// operands from different groups.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (table order, vertex count, oracle budget) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked invariant failed on computed data.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hard assertion inside the engine failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) {
    throw InternalError(what);
  }
}

}  // namespace braidrep
