#include "akor/error.hpp"

namespace akor {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonOddOrder: return "NonOddOrder";
    case ErrorCode::ImaginaryAxisEigenvalue: return "ImaginaryAxisEigenvalue";
    case ErrorCode::SingularT1: return "SingularT1";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::VanishingModeValue: return "VanishingModeValue";
  }
  return "Unknown";
}

}  // namespace akor
