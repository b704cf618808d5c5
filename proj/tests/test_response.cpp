#include <doctest.h>

#include <cmath>

#include "akor/error.hpp"
#include "akor/pipeline.hpp"

using namespace akor;
using cd = std::complex<double>;

namespace {

OddRationalOrder odd(int p, int q) { return OddRationalOrder::from(make_order(p, q)); }

ModeSet modes_of(std::vector<cd> roots, std::int64_t q) {
  ModeSet m;
  m.roots = std::move(roots);
  m.q = q;
  return m;
}

// Oscillator-kind loop so the derivative step is 1/q; only the kind matters here.
ClosedLoop plain_loop() { return ClosedLoop{PlantKind::SecondOrder, odd(1, 3), {}, {}}; }

Design first_order_design() {
  DesignRequest req;
  req.kind = PlantKind::FirstOrder;
  req.num = 1;
  req.den = 2;
  req.beta = 1.0;
  req.weights = {3.0, 1.0};
  req.odd_tol = 0.08;
  return design(req);
}

Trajectory hand_trajectory(std::vector<Sample> s) {
  Trajectory t;
  t.samples = std::move(s);
  return t;
}

}  // namespace

TEST_CASE("zero coefficients give a zero trajectory") {
  SolutionRepresentation rep{modes_of({-1.0, -2.0}, 1), {0.0, 0.0}, 0.5, 1};
  RegulatorLaw law{Eigen::Vector2d(1.0, 2.0), 1.0};
  const auto tr = respond(plain_loop(), rep, law, {0.5, 3.0, 11});
  REQUIRE(tr.samples.size() == 11);
  for (const auto& s : tr.samples) {
    CHECK(s.y == 0.0);
    CHECK(s.u == 0.0);
  }
  CHECK(tr.samples.front().x == 0.5);
  CHECK(tr.samples.back().x == 3.0);
  CHECK(cost(tr, {1, 1}).value == 0.0);
}

TEST_CASE("q = 1 control matches direct differentiation") {
  // y = e^{1-x} - e^{2-2x}: modes -1 (c = e) and -2 (c = -e^2).
  SolutionRepresentation rep{modes_of({-2.0, -1.0}, 1), {-std::exp(2.0), std::exp(1.0)}, 1.0, 1};
  const double k0 = 1.7, k1 = 0.6;
  RegulatorLaw law{Eigen::Vector2d(k0, k1), 1.0};
  const auto tr = respond(plain_loop(), rep, law, {1.0, 4.0, 31});
  for (const auto& s : tr.samples) {
    const double y = std::exp(1 - s.x) - std::exp(2 - 2 * s.x);
    const double dy = -std::exp(1 - s.x) + 2 * std::exp(2 - 2 * s.x);
    CHECK(s.y == doctest::Approx(y).epsilon(1e-10));
    CHECK(std::abs(s.u - (-(k0 * y + k1 * dy))) <= 1e-6);
  }
}

TEST_CASE("x is strictly increasing from x_start") {
  SolutionRepresentation rep{modes_of({-1.0}, 1), {1.0}, 0.2, 1};
  RegulatorLaw law{Eigen::VectorXd::Ones(1), 1.0};
  const auto tr = respond(plain_loop(), rep, law, {0.2, 1.0, 7});
  CHECK(tr.samples[0].x >= tr.x0);
  for (size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].x > tr.samples[i - 1].x);
}

TEST_CASE("respond rejects bad grids") {
  SolutionRepresentation rep{modes_of({-1.0}, 1), {1.0}, 1.0, 1};
  RegulatorLaw law{Eigen::VectorXd::Ones(1), 1.0};
  CHECK_THROWS_AS(respond(plain_loop(), rep, law, {1.0, 2.0, 1}), Error);
  CHECK_THROWS_AS(respond(plain_loop(), rep, law, {0.5, 2.0, 5}), Error);
  CHECK_THROWS_AS(respond(plain_loop(), rep, law, {2.0, 2.0, 5}), Error);
}

TEST_CASE("cost hand value and tail flag") {
  const auto flat = hand_trajectory({{0.0, 1.0, 0.0}, {0.5, 1.0, 0.0}, {1.0, 1.0, 0.0}});
  const auto c = cost(flat, {2.0, 1.0});
  CHECK(c.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.tail_warning);

  const auto quiet = hand_trajectory({{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}});
  CHECK_FALSE(cost(quiet, {1.0, 1.0}).tail_warning);
  CHECK_THROWS_AS(cost(hand_trajectory({{0.0, 1.0, 0.0}}), {1, 1}), Error);
}

TEST_CASE("decay metric") {
  std::vector<Sample> s;
  for (int i = 0; i < 40; ++i) s.push_back({0.1 * i, std::exp(-0.1 * i), 0.0});
  auto m = decay_metric(hand_trajectory(s));
  CHECK(m.monotone_envelope);
  CHECK(m.sup_tail == doctest::Approx(std::exp(-3.0)));

  // A growing mode, Re lambda^q > 0.
  SolutionRepresentation grow{modes_of({0.5}, 1), {1.0}, 0.1, 1};
  RegulatorLaw law{Eigen::VectorXd::Ones(1), 1.0};
  const auto tr = respond(plain_loop(), grow, law, {0.1, 10.0, 40});
  CHECK_FALSE(decay_metric(tr).monotone_envelope);

  CHECK_THROWS_AS(decay_metric(hand_trajectory({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}})), Error);
}

TEST_CASE("first-order closed loop response decays toward zero") {
  const auto d = first_order_design();
  const auto rep = initial_value_solution(d, 0.1, 1.0);
  const auto tr = respond(d.closed_loop, rep, d.law, {0.1, 10.1, 201});
  CHECK(tr.samples.front().y == doctest::Approx(1.0).epsilon(1e-10));
  for (const auto& s : tr.samples) {
    // u = -3y for this plant.
    CHECK(s.u == doctest::Approx(-3.0 * s.y).epsilon(1e-10));
  }
  CHECK(decay_metric(tr).monotone_envelope);
  CHECK(std::abs(tr.samples.back().y) < std::abs(tr.samples.front().y));
}

TEST_CASE("sup_tail shrinks as the window grows") {
  const auto d = first_order_design();
  const auto rep = initial_value_solution(d, 0.1, 1.0);
  double prev = 1e300;
  for (double end : {10.0, 20.0, 40.0}) {
    const auto tr = respond(d.closed_loop, rep, d.law, {0.1, end, 200});
    const double tail = decay_metric(tr).sup_tail;
    CHECK(tail < prev);
    prev = tail;
  }
}

TEST_CASE("cost estimate is stable under grid refinement") {
  const auto d = first_order_design();
  const auto rep = initial_value_solution(d, 0.1, 1.0);
  const auto coarse = respond(d.closed_loop, rep, d.law, {0.1, 10.1, 1001});
  const auto fine = respond(d.closed_loop, rep, d.law, {0.1, 10.1, 2001});
  const double a = cost(coarse, {3, 1}).value, b = cost(fine, {3, 1}).value;
  CHECK(std::isfinite(a));
  CHECK(std::abs(a - b) <= 0.01 * std::abs(b));
}
