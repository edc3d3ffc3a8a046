#include "siegelchar/error.hpp"

namespace siegelchar {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::NotLevel2: return "NotLevel2";
    case ErrorKind::InterpolationInconsistent: return "InterpolationInconsistent";
    case ErrorKind::NotUpperHalfSpace: return "NotUpperHalfSpace";
    case ErrorKind::NonPositiveTolerance: return "NonPositiveTolerance";
    case ErrorKind::SingularFactor: return "SingularFactor";
    case ErrorKind::TooFewUsable: return "TooFewUsable";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace siegelchar
