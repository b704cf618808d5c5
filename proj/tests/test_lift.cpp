#include <doctest.h>

#include <random>

#include "akor/error.hpp"
#include "akor/lift.hpp"
#include "akor/modal.hpp"
#include "oracles.hpp"

using namespace akor;

namespace {

OddRationalOrder odd(int p, int q) { return OddRationalOrder::from(make_order(p, q)); }

}  // namespace

TEST_CASE("plant_coeffs") {
  auto ab = plant_coeffs(PhysicalPlant{1, 1, 1, 1, 1});
  CHECK(ab.a == doctest::Approx(2.0));
  CHECK(ab.b == doctest::Approx(1.0));

  ab = plant_coeffs(PhysicalPlant{1, 0, 1, 1, 0});
  CHECK(ab.a == 0.0);
  CHECK(ab.b == 0.0);

  ab = plant_coeffs(DirectPlant{3, 1});
  CHECK(ab.a == 3.0);
  CHECK(ab.b == 1.0);

  // m = 2, s = 3, mu*rho = 4: a = 2*3*2/2, b = k/m.
  ab = plant_coeffs(PhysicalPlant{2, 3, 1, 4, 5});
  CHECK(ab.a == doctest::Approx(6.0));
  CHECK(ab.b == doctest::Approx(2.5));

  CHECK_THROWS_AS(plant_coeffs(PhysicalPlant{0, 1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(plant_coeffs(PhysicalPlant{1, 1, -1, 1, 1}), Error);
  CHECK_THROWS_AS(plant_coeffs(DirectPlant{-1, 1}), Error);
}

TEST_CASE("build_lifted on the alpha = 1/3 example") {
  const auto sys = build_lifted(3, 1, odd(1, 3), {1, 1});
  REQUIRE(sys.dimension() == 6);
  Eigen::RowVectorXd last(6);
  last << -1, -3, 0, 0, 0, 0;
  CHECK(sys.F.row(5).isApprox(last));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 6; ++j) CHECK(sys.F(i, j) == (j == i + 1 ? 1.0 : 0.0));
  Eigen::VectorXd g = Eigen::VectorXd::Zero(6);
  g(5) = 1;
  CHECK(sys.G == g);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(6, 6);
  q(0, 0) = 1;
  CHECK(sys.Q == q);
  CHECK(sys.R == 1.0);
}

TEST_CASE("build_lifted places -a at column p") {
  const auto sys = build_lifted(2, 4, odd(3, 5), {1, 1});
  REQUIRE(sys.dimension() == 10);
  for (int j = 0; j < 10; ++j) {
    const double expect = j == 0 ? -4.0 : (j == 3 ? -2.0 : 0.0);
    CHECK(sys.F(9, j) == expect);
  }
  const auto zero = build_lifted(0, 0, odd(5, 7), {1, 1});
  CHECK(zero.F.row(13).isZero());
}

TEST_CASE("open_loop_charpoly") {
  auto cp = open_loop_charpoly(build_lifted(3, 1, odd(1, 3), {1, 1}));
  CHECK(cp == std::vector<double>{1, 0, 0, 0, 0, 3, 1});

  cp = open_loop_charpoly(build_lifted(0, 0, odd(1, 3), {1, 1}));
  CHECK(cp == std::vector<double>{1, 0, 0, 0, 0, 0, 0});

  cp = open_loop_charpoly(build_lifted(2, 4, odd(3, 5), {1, 1}));
  std::vector<double> expect(11, 0.0);
  expect[0] = 1;
  expect[10 - 3] = 2;
  expect[10] = 4;
  CHECK(cp == expect);
}

TEST_CASE("companion charpoly matches the eigenvalues of F") {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> coef(0.0, 10.0);
  const std::pair<int, int> orders[] = {{1, 3}, {5, 3}, {3, 5}, {7, 5}, {1, 7}, {9, 7}, {13, 7}};
  for (auto [p, q] : orders) {
    for (int trial = 0; trial < 5; ++trial) {
      const double a = coef(rng), b = coef(rng);
      const auto sys = build_lifted(a, b, odd(p, q), {1, 1});
      const auto analytic = open_loop_charpoly(sys);

      Eigen::EigenSolver<Eigen::MatrixXd> es(sys.F);
      std::vector<std::complex<double>> ev(es.eigenvalues().data(),
                                           es.eigenvalues().data() + es.eigenvalues().size());
      const auto numeric = oracle::expand_roots(ev);
      REQUIRE(numeric.size() == analytic.size());
      double scale = 1.0;
      for (double c : analytic) scale = std::max(scale, std::abs(c));
      for (size_t i = 0; i < analytic.size(); ++i) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(i);
        CHECK(std::abs(numeric[i] - analytic[i]) <= 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("Q is rank one with trace qw") {
  const auto sys = build_lifted(1, 2, odd(3, 5), {2.5, 0.7});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.Q);
  CHECK(es.eigenvalues().minCoeff() >= 0.0);
  int rank = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) rank += es.eigenvalues()(i) > 1e-12;
  CHECK(rank == 1);
  CHECK(sys.Q.trace() == doctest::Approx(2.5));
  CHECK(sys.R == 0.7);
}

TEST_CASE("first-order plant is a scalar system") {
  const auto sys = build_first_order(1.0, odd(3, 7), {3, 1});
  CHECK(sys.dimension() == 1);
  CHECK(sys.F(0, 0) == 1.0);
  CHECK(sys.G(0) == 1.0);
  CHECK(sys.Q(0, 0) == 3.0);
  CHECK(sys.step_numerator() == 3);
  CHECK(open_loop_charpoly(sys) == std::vector<double>{1, 0, 0, -1});
}

TEST_CASE("weights and initial conditions are validated") {
  CHECK_THROWS_AS(build_lifted(1, 1, odd(1, 3), {0, 1}), Error);
  CHECK_THROWS_AS(build_lifted(1, 1, odd(1, 3), {1, -1}), Error);
  CHECK_THROWS_AS(oscillator_initial_conditions(0.0, 1.0, odd(1, 3)), Error);

  const auto ics = oscillator_initial_conditions(0.1, 2.0, odd(1, 3));
  CHECK(ics.values == std::vector<double>{0, 0, 0, 2, 0, 0});
}
