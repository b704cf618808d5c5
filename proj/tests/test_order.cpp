#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "akor/error.hpp"
#include "akor/order.hpp"

using namespace akor;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an akor::Error");
  return ErrorCode::InvalidArgument;
}

double dist(const OddRationalOrder& o, double target) { return std::abs(o.value() - target); }

// Exact |p/q - n/d| <= tol, immune to the rounding of either quotient.
bool within(const OddRationalOrder& o, std::int64_t n, std::int64_t d, double tol) {
  const auto diff = std::abs(o.p() * d - n * o.q());
  return static_cast<long double>(diff) <= static_cast<long double>(tol) * o.q() * d * (1 + 1e-15L);
}

}  // namespace

TEST_CASE("make_order reduces and classifies") {
  const auto third = make_order(1, 3);
  CHECK(third.p() == 1);
  CHECK(third.q() == 3);
  CHECK(third.is_odd());

  const auto half = make_order(2, 4);
  CHECK(half.p() == 1);
  CHECK(half.q() == 2);
  CHECK_FALSE(half.is_odd());
}

TEST_CASE("make_order rejects out-of-range fractions") {
  CHECK(code_of([] { make_order(7, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_order(2, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_order(4, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_order(0, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_order(-1, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_order(1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("OddRationalOrder refuses even components") {
  CHECK(code_of([] { OddRationalOrder::from(make_order(1, 2)); }) == ErrorCode::NonOddOrder);
  CHECK(code_of([] { OddRationalOrder::from(make_order(2, 3)); }) == ErrorCode::NonOddOrder);
  CHECK(OddRationalOrder::from(make_order(3, 5)).q() == 5);
}

TEST_CASE("odd_approximate examples") {
  const auto same = odd_approximate(make_order(3, 5), 1e-9);
  CHECK(same.p() == 3);
  CHECK(same.q() == 5);

  const auto k1 = odd_approximate(make_order(1, 2), 0.08);
  CHECK(k1.p() == 3);
  CHECK(k1.q() == 7);

  // 2/3 with tolerance 1/9: the nearest odd/odd candidates at equal error are
  // 5/9 and 7/9 (the l-family member); ties pick the smaller numerator.
  const auto two_thirds = odd_approximate(make_order(2, 3), 1.0 / 9.0);
  CHECK(dist(two_thirds, 2.0 / 3.0) <= 1.0 / 9.0 + 1e-15);
  CHECK(two_thirds.p() % 2 == 1);
  CHECK(two_thirds.q() % 2 == 1);
}

TEST_CASE("l-family member 7/9 is an admissible approximation of 2/3") {
  // k = m = l = 1 in (4kl + 2k + 1) / (4ml + 2(m + l) + 1).
  const std::int64_t k = 1, m = 1, l = 1;
  const std::int64_t num = 4 * k * l + 2 * k + 1;
  const std::int64_t den = 4 * m * l + 2 * (m + l) + 1;
  CHECK(num == 7);
  CHECK(den == 9);
  const auto o = OddRationalOrder::from(make_order(num, den));
  CHECK(std::abs(o.value() - 2.0 / 3.0) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("odd_approximate output invariants") {
  const std::pair<int, int> targets[] = {{1, 2}, {2, 3}, {1, 4}, {3, 2}, {4, 5}, {5, 6}, {7, 4}};
  const double tols[] = {0.2, 0.08, 0.03, 1e-2, 1e-3, 1e-4, 1e-6};
  for (auto [n, d] : targets) {
    const double target = static_cast<double>(n) / d;
    double prev = 1e300;
    for (double tol : tols) {
      const auto o = odd_approximate(make_order(n, d), tol);
      CAPTURE(n);
      CAPTURE(d);
      CAPTURE(tol);
      CHECK(o.p() % 2 == 1);
      CHECK(o.q() % 2 == 1);
      CHECK(std::gcd(o.p(), o.q()) == 1);
      CHECK(o.p() < 2 * o.q());
      CHECK(o.p() != o.q());
      CHECK(within(o, n, d, tol));
      // Shrinking tol never moves the answer away from the target.
      CHECK(dist(o, target) <= prev);
      prev = dist(o, target);
    }
  }
}

TEST_CASE("the (2k+1)/(4k+3) family converges to 1/2") {
  double prev = 1.0;
  for (int k = 1; k <= 10; ++k) {
    const auto o = OddRationalOrder::from(make_order(2 * k + 1, 4 * k + 3));
    const double err = std::abs(o.value() - 0.5);
    CHECK(err == doctest::Approx(1.0 / (2.0 * (4 * k + 3))).epsilon(1e-14));
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("odd_approximate on 1/2 lands on the family at the family's own error") {
  for (int k = 1; k <= 10; ++k) {
    const double err = 1.0 / (2.0 * (4 * k + 3));
    const auto o = odd_approximate(make_order(1, 2), err);
    CAPTURE(k);
    CHECK(within(o, 1, 2, err));
    CHECK(o.q() <= 4 * k + 3);
  }
}

TEST_CASE("odd_approximate rejects bad tolerances") {
  CHECK(code_of([] { odd_approximate(make_order(1, 2), 0.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { odd_approximate(make_order(1, 2), -1.0); }) == ErrorCode::InvalidArgument);
}
