#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace zlc {

/// Base of the library's error hierarchy. `code()` is a stable,
/// machine-readable name (e.g. "NotFixedPointFree"); `what()` adds detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Bad invocation: malformed arguments, out-of-range indices. CLI exit 1.
struct UsageError : Error {
  using Error::Error;
};

/// A group/field/family could not be constructed as requested. CLI exit 2.
struct ConstructionError : Error {
  using Error::Error;
};

/// Numeric breakdown or a failed cross-check at tolerance. CLI exit 3.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace zlc
