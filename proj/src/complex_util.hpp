#pragma once

#include <complex>
#include <cstdint>

namespace akor::detail {

/// z^n by repeated squaring; exact sign handling for real z.
inline std::complex<double> ipow(std::complex<double> z, std::int64_t n) {
  std::complex<double> result = 1.0;
  bool invert = n < 0;
  std::uint64_t e = static_cast<std::uint64_t>(invert ? -n : n);
  while (e > 0) {
    if (e & 1u) result *= z;
    z *= z;
    e >>= 1u;
  }
  return invert ? 1.0 / result : result;
}

}  // namespace akor::detail
