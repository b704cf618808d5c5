#pragma once

#include <stdexcept>
#include <string>

namespace akor {

/// Failure categories shared by every module. The C API maps these one-to-one
/// onto `akor_status` values.
enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NonOddOrder,
  ImaginaryAxisEigenvalue,
  SingularT1,
  NoConvergence,
  DegenerateRoots,
  VanishingModeValue,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of the numerics rather than of the inputs.
  bool is_numerical() const noexcept {
    return code_ != ErrorCode::InvalidArgument &&
           code_ != ErrorCode::DimensionMismatch;
  }

 private:
  ErrorCode code_;
};

}  // namespace akor
