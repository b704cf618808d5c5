#pragma once

#include <cstdint>

namespace akor {

/// Fractional order alpha = p/q in lowest terms with 0 < alpha < 2, alpha != 1.
class RationalOrder {
 public:
  /// Reduces num/den and validates the range; throws Error(InvalidArgument).
  static RationalOrder make(std::int64_t num, std::int64_t den);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  double value() const noexcept {
    return static_cast<double>(p_) / static_cast<double>(q_);
  }
  bool is_odd() const noexcept { return (p_ % 2 == 1) && (q_ % 2 == 1); }

  friend bool operator==(const RationalOrder&, const RationalOrder&) = default;

 private:
  RationalOrder(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

/// A RationalOrder whose numerator and denominator are both odd; the class of
/// orders for which the Hamiltonian keeps its mirror spectrum.
class OddRationalOrder {
 public:
  /// Throws Error(NonOddOrder) when either component is even.
  static OddRationalOrder from(const RationalOrder& order);

  std::int64_t p() const noexcept { return order_.p(); }
  std::int64_t q() const noexcept { return order_.q(); }
  double value() const noexcept { return order_.value(); }
  const RationalOrder& rational() const noexcept { return order_; }

  friend bool operator==(const OddRationalOrder&, const OddRationalOrder&) = default;

 private:
  explicit OddRationalOrder(RationalOrder order) : order_(order) {}
  RationalOrder order_;
};

RationalOrder make_order(std::int64_t num, std::int64_t den);

/// Closest odd/odd fraction found by scanning odd denominators upward: for each
/// denominator the odd numerator nearest to den * alpha is tried (ties go to
/// the smaller numerator) and the first candidate within `tol` is returned.
/// Odd/odd inputs come back unchanged.
OddRationalOrder odd_approximate(const RationalOrder& order, double tol);

}  // namespace akor
