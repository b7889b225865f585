#include "threeway/error.hpp"

namespace threeway {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvertedBounds: return "InvertedBounds";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NegativeScale: return "NegativeScale";
    case ErrorKind::NonPositiveLoss: return "NonPositiveLoss";
    case ErrorKind::ConditionViolation: return "ConditionViolation";
    case ErrorKind::EmptyUniverse: return "EmptyUniverse";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::InvalidThresholds: return "InvalidThresholds";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingInput: return "MissingInput";
  }
  return "Unknown";
}

}  // namespace threeway
