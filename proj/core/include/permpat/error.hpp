#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permpat {

enum class ErrorKind {
  NotABijection,
  DegeneratePoints,
  BadPositions,
  TooLarge,
  ZeroDivision,
  NotRepresentable,
  MissingGenerators,
  HomomorphismViolation,
  InvalidTableau,
  DegreeViolation,
  Diverges,
  InsufficientData,
  TiesPresent,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::DegeneratePoints: return "DegeneratePoints";
    case ErrorKind::BadPositions: return "BadPositions";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::MissingGenerators: return "MissingGenerators";
    case ErrorKind::HomomorphismViolation: return "HomomorphismViolation";
    case ErrorKind::InvalidTableau: return "InvalidTableau";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::Diverges: return "Diverges";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::TiesPresent: return "TiesPresent";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace permpat
