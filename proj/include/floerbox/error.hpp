// Error type shared across the library: every failure carries a stable
// machine-readable code alongside the human-readable message.
#pragma once

#include <stdexcept>
#include <string>

namespace floerbox {

enum class ErrorCode {
  Domain,      // invalid argument or out-of-range input
  Parity,      // half-integer slot where an integer is required
  Overflow,    // integer overflow in exact arithmetic
  Model,       // structural violation in a chain-complex model
  Structure,   // internal consistency failure (d^2 != 0, grading mismatch)
  Io,          // file or JSON input problems
  Usage,       // command-line misuse
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Parity: return "parity";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Model: return "model";
    case ErrorCode::Structure: return "structure";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace floerbox
