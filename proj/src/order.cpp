#include "akor/order.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "akor/error.hpp"

namespace akor {

namespace {

// Denominators beyond this are not representable as a useful order anyway.
constexpr std::int64_t kMaxDenominator = 100'000'001;

}  // namespace

RationalOrder RationalOrder::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0) {
    std::ostringstream msg;
    msg << "order " << num << "/" << den << " must have positive numerator and denominator";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  const std::int64_t g = std::gcd(num, den);
  const std::int64_t p = num / g;
  const std::int64_t q = den / g;
  if (p >= 2 * q || p == q) {
    std::ostringstream msg;
    msg << "order " << num << "/" << den << " outside 0 < alpha < 2, alpha != 1";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  return RationalOrder(p, q);
}

OddRationalOrder OddRationalOrder::from(const RationalOrder& order) {
  if (!order.is_odd()) {
    std::ostringstream msg;
    msg << "order " << order.p() << "/" << order.q() << " is not odd/odd";
    throw Error(ErrorCode::NonOddOrder, msg.str());
  }
  return OddRationalOrder(order);
}

RationalOrder make_order(std::int64_t num, std::int64_t den) {
  return RationalOrder::make(num, den);
}

OddRationalOrder odd_approximate(const RationalOrder& order, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::InvalidArgument, "odd approximation tolerance must be positive");
  }
  if (order.is_odd()) return OddRationalOrder::from(order);

  const std::int64_t p = order.p();
  const std::int64_t q = order.q();
  for (std::int64_t den = 1; den <= kMaxDenominator; den += 2) {
    // den * alpha = scaled / q exactly.
    const std::int64_t scaled = den * p;
    std::int64_t lower = scaled / q;
    if (lower % 2 == 0) --lower;
    const std::int64_t upper = lower + 2;
    const std::int64_t d_lower = std::abs(scaled - lower * q);
    const std::int64_t d_upper = std::abs(upper * q - scaled);
    std::int64_t num = (d_upper < d_lower) ? upper : lower;
    if (num < 1) num = 1;
    if (num == den || num >= 2 * den || std::gcd(num, den) != 1) continue;
    const double err = static_cast<double>(std::abs(num * q - scaled)) /
                       (static_cast<double>(den) * static_cast<double>(q));
    if (err <= tol) return OddRationalOrder::from(RationalOrder::make(num, den));
  }
  throw Error(ErrorCode::InvalidArgument, "odd approximation tolerance too small");
}

}  // namespace akor
