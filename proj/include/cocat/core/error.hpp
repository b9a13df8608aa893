#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cocat {

enum class ErrorKind {
  TypeMismatch,
  IllFormedPushout,
  UnsupportedCapability,
  NotMono,
  NotFree,
  SizeLimit,
  ClosureExceeded,
  NonComposable,
  InvalidArgument,
  ParseError,
  CapExceeded,
  UnknownExample,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::IllFormedPushout: return "IllFormedPushout";
    case ErrorKind::UnsupportedCapability: return "UnsupportedCapability";
    case ErrorKind::NotMono: return "NotMono";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ClosureExceeded: return "ClosureExceeded";
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnknownExample: return "UnknownExample";
  }
  return "Error";
}

}  // namespace cocat
