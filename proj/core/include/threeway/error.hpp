#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace threeway {

enum class ErrorKind {
  InvertedBounds,
  OutOfRange,
  NegativeScale,
  NonPositiveLoss,
  ConditionViolation,
  EmptyUniverse,
  DuplicateId,
  InvalidThresholds,
  ParseError,
  MissingInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Validation failure raised by constructors and ingestion. The kind is
/// stable and machine-checkable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace threeway
