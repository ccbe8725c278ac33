#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace codim2 {

enum class ErrorKind {
  InvalidInput,
  NonPositiveC2,
  NegativeTrace,
  PrecisionExhausted,
  DegenerateZ,
  RootOrderViolated,
  IdentityViolation,
  DomainError,
  NotFoundWithinLimit,
  CapExceeded,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPositiveC2: return "NonPositiveC2";
    case ErrorKind::NegativeTrace: return "NegativeTrace";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DegenerateZ: return "DegenerateZ";
    case ErrorKind::RootOrderViolated: return "RootOrderViolated";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotFoundWithinLimit: return "NotFoundWithinLimit";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace codim2
