#include "quatsurf/error.hpp"

namespace quatsurf {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::PreconditionDegree: return "PreconditionDegree";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::NoProgress: return "NoProgress";
    case ErrorKind::NotTupleShaped: return "NotTupleShaped";
    case ErrorKind::BasePoint: return "BasePoint";
    case ErrorKind::PolePoint: return "PolePoint";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::InvalidCircle: return "InvalidCircle";
    case ErrorKind::InvalidQuadric: return "InvalidQuadric";
    case ErrorKind::InvalidParametrization: return "InvalidParametrization";
    case ErrorKind::MissingParametrization: return "MissingParametrization";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace quatsurf
