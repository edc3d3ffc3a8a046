#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace siegelchar {

enum class ErrorKind {
  BadShape,
  NotSymplectic,
  DegreeMismatch,
  IndexOutOfRange,
  ParityMismatch,
  NotLevel2,
  InterpolationInconsistent,
  NotUpperHalfSpace,
  NonPositiveTolerance,
  SingularFactor,
  TooFewUsable,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every precondition failure in the library is reported through this type;
/// kind() lets callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace siegelchar
