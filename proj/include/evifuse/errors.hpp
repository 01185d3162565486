#pragma once

#include <stdexcept>
#include <string>

namespace evifuse {

enum class ErrorKind {
  invalid_input,   // bad arguments, malformed config, dimension mismatch
  total_conflict,  // Dempster combination of fully contradictory opinions
  dependency,      // required artifact missing or hash mismatch
  numerical,       // NaN loss, diverged optimization
  io,              // unreadable/unwritable file, bad magic or version
  unsupported,     // operation not defined for the given configuration
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Process exit code per error class (see README "Exit codes").
  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::invalid_input:
      case ErrorKind::unsupported:
        return 2;
      case ErrorKind::dependency:
        return 3;
      case ErrorKind::total_conflict:
      case ErrorKind::numerical:
        return 4;
      case ErrorKind::io:
        return 5;
    }
    return 1;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace evifuse
