#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatsurf {

enum class ErrorKind {
  ZeroDivision,
  DegreeTooHigh,
  PreconditionDegree,
  NotDegenerate,
  NoProgress,
  NotTupleShaped,
  BasePoint,
  PolePoint,
  DegenerateFamily,
  InvalidCircle,
  InvalidQuadric,
  InvalidParametrization,
  MissingParametrization,
  TooFewPoints,
  FamilyMismatch,
  ParseError,
  IoError,
};

/// Stable machine-readable name, used in the CLI's error JSON.
std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quatsurf
