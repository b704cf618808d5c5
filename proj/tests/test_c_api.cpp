#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "akor/akor.h"

namespace {

akor_design make_example(akor_solver solver = AKOR_SOLVER_SPECTRAL) {
  akor_design_params p;
  akor_design_params_init(&p);
  p.a = 3;
  p.b = 1;
  p.solver = solver;
  akor_design d = nullptr;
  REQUIRE(akor_design_create(&p, &d) == AKOR_OK);
  return d;
}

std::vector<double> gains(akor_design d) {
  size_t len = 0;
  REQUIRE(akor_design_gains(d, nullptr, 0, &len) == AKOR_OK);
  std::vector<double> g(len);
  REQUIRE(akor_design_gains(d, g.data(), g.size(), &len) == AKOR_OK);
  return g;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::strcmp(akor_status_name(AKOR_OK), "Ok") == 0);
  CHECK(std::strcmp(akor_status_name(AKOR_IMAGINARY_AXIS_EIGENVALUE), "ImaginaryAxisEigenvalue") ==
        0);
  CHECK(std::strcmp(akor_status_name(AKOR_NON_ODD_ORDER), "NonOddOrder") == 0);
  CHECK(akor_status_is_numerical(AKOR_SINGULAR_T1));
  CHECK_FALSE(akor_status_is_numerical(AKOR_INVALID_ARGUMENT));
  CHECK_FALSE(akor_status_is_numerical(AKOR_BUFFER_TOO_SMALL));
}

TEST_CASE("orders") {
  int64_t p = 0, q = 0;
  int odd = -1;
  CHECK(akor_make_order(2, 4, &p, &q, &odd) == AKOR_OK);
  CHECK(p == 1);
  CHECK(q == 2);
  CHECK(odd == 0);
  CHECK(std::strlen(akor_last_error()) == 0);

  CHECK(akor_make_order(7, 3, &p, &q, &odd) == AKOR_INVALID_ARGUMENT);
  CHECK(std::strlen(akor_last_error()) > 0);

  CHECK(akor_odd_approximate(1, 2, 0.08, &p, &q) == AKOR_OK);
  CHECK(p == 3);
  CHECK(q == 7);
  CHECK(akor_odd_approximate(1, 2, 0.0, &p, &q) == AKOR_INVALID_ARGUMENT);

  double a = 0, b = 0;
  CHECK(akor_plant_coeffs_physical(1, 1, 1, 1, 1, &a, &b) == AKOR_OK);
  CHECK(a == doctest::Approx(2.0));
  CHECK(b == doctest::Approx(1.0));
  CHECK(akor_plant_coeffs_physical(0, 1, 1, 1, 1, &a, &b) == AKOR_INVALID_ARGUMENT);
}

TEST_CASE("design getters") {
  akor_design d = make_example();
  const auto g = gains(d);
  const double K[] = {0.4142, 3.5878, 12.162, 13.2864, 9.5964, 4.3809};
  REQUIRE(g.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(g[i] - K[i]) <= 1e-3);

  size_t n = 0;
  CHECK(akor_design_dimension(d, &n) == AKOR_OK);
  CHECK(n == 6);

  size_t len = 0;
  CHECK(akor_design_char_poly(d, nullptr, 0, &len) == AKOR_OK);
  CHECK(len == 7);
  std::vector<double> small(3);
  CHECK(akor_design_char_poly(d, small.data(), small.size(), &len) == AKOR_BUFFER_TOO_SMALL);

  CHECK(akor_design_riccati(d, nullptr, 0, &len) == AKOR_OK);
  CHECK(len == 36);
  std::vector<double> S(len);
  CHECK(akor_design_riccati(d, S.data(), S.size(), &len) == AKOR_OK);
  for (int j = 0; j < 6; ++j) CHECK(S[5 * 6 + j] == doctest::Approx(g[j]));

  CHECK(akor_design_stable_eigenvalues(d, nullptr, 0, &len) == AKOR_OK);
  CHECK(len == 6);
  std::vector<double> ev(2 * len);
  CHECK(akor_design_stable_eigenvalues(d, ev.data(), ev.size(), &len) == AKOR_OK);
  for (size_t i = 0; i < len; ++i) CHECK(ev[2 * i] < 0.0);

  double res = -1;
  CHECK(akor_design_residual(d, &res) == AKOR_OK);
  CHECK(res < 1e-8);

  int64_t rp, rq, ep, eq;
  CHECK(akor_design_orders(d, &rp, &rq, &ep, &eq) == AKOR_OK);
  CHECK(rp == 1);
  CHECK(eq == 3);

  akor_modes m = nullptr;
  CHECK(akor_design_modes(d, &m) == AKOR_OK);
  akor_verdict re_verdict, decay;
  size_t marginal = 99;
  CHECK(akor_modes_stability(m, &re_verdict, &decay, &marginal) == AKOR_OK);
  CHECK(re_verdict == AKOR_VERDICT_HOLDS);
  CHECK(decay == AKOR_VERDICT_FAILS);
  CHECK(marginal == 0);
  std::vector<int> neg(6), dec(6);
  CHECK(akor_modes_flags(m, neg.data(), dec.data(), 6, &len) == AKOR_OK);
  for (int v : neg) CHECK(v == 1);
  akor_modes_destroy(m);

  akor_design_destroy(d);
}

TEST_CASE("sign solver agrees") {
  akor_design a = make_example(AKOR_SOLVER_SPECTRAL);
  akor_design b = make_example(AKOR_SOLVER_SIGN);
  const auto ga = gains(a), gb = gains(b);
  for (size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == doctest::Approx(gb[i]).epsilon(1e-9));
  size_t len = 99;
  CHECK(akor_design_stable_eigenvalues(b, nullptr, 0, &len) == AKOR_OK);
  CHECK(len == 0);
  akor_design_destroy(a);
  akor_design_destroy(b);
}

TEST_CASE("modes round trip from the characteristic polynomial") {
  akor_design d = make_example();
  size_t len = 0;
  akor_design_char_poly(d, nullptr, 0, &len);
  std::vector<double> cp(len);
  akor_design_char_poly(d, cp.data(), cp.size(), &len);

  akor_modes from_design = nullptr, from_poly = nullptr;
  REQUIRE(akor_design_modes(d, &from_design) == AKOR_OK);
  REQUIRE(akor_modes_from_poly(cp.data(), cp.size(), 3, &from_poly) == AKOR_OK);
  std::vector<double> r1(12), r2(12);
  akor_modes_roots(from_design, r1.data(), r1.size(), &len);
  akor_modes_roots(from_poly, r2.data(), r2.size(), &len);
  CHECK(std::memcmp(r1.data(), r2.data(), sizeof(double) * 12) == 0);

  const double not_monic[] = {2, 1};
  akor_modes bad = nullptr;
  CHECK(akor_modes_from_poly(not_monic, 2, 1, &bad) == AKOR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  const double repeated[] = {1, 2, 1};
  CHECK(akor_modes_from_poly(repeated, 3, 1, &bad) == AKOR_DEGENERATE_ROOTS);

  akor_modes_destroy(from_design);
  akor_modes_destroy(from_poly);
  akor_design_destroy(d);
}

TEST_CASE("first-order plant, odd approximation and refusal") {
  akor_design_params p;
  akor_design_params_init(&p);
  p.kind = AKOR_PLANT_FIRST_ORDER;
  p.num = 1;
  p.den = 2;
  p.beta = 1;
  p.qw = 3;
  p.odd_tol = 0.08;
  akor_design d = nullptr;
  REQUIRE(akor_design_create(&p, &d) == AKOR_OK);
  const auto g = gains(d);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == doctest::Approx(3.0));
  int64_t num = 0, den = 0;
  CHECK(akor_design_step(d, &num, &den) == AKOR_OK);
  CHECK(num == 3);
  CHECK(den == 7);
  akor_design_destroy(d);

  p.approximate = 0;
  d = nullptr;
  CHECK(akor_design_create(&p, &d) == AKOR_NON_ODD_ORDER);
  CHECK(d == nullptr);
}

TEST_CASE("solution, trajectory and metrics") {
  akor_design d = make_example();
  akor_solution s = nullptr;
  REQUIRE(akor_solution_create(d, 0.1, 1.0, &s) == AKOR_OK);
  double y = 1, im = 1;
  CHECK(akor_solution_eval(s, 0.1, &y, &im) == AKOR_OK);
  CHECK(std::abs(y) < 1e-9);
  CHECK(akor_solution_eval(s, 1.0, &y, &im) == AKOR_OK);
  CHECK(y == doctest::Approx(0.0827).epsilon(1e-3));
  CHECK(std::abs(im) < 1e-8);

  akor_trajectory t = nullptr;
  REQUIRE(akor_respond(d, s, 0.1, 20.0, 80, &t) == AKOR_OK);
  size_t len = 0;
  CHECK(akor_trajectory_samples(t, nullptr, 0, &len) == AKOR_OK);
  CHECK(len == 80);
  std::vector<double> xyu(3 * len);
  CHECK(akor_trajectory_samples(t, xyu.data(), xyu.size(), &len) == AKOR_OK);
  CHECK(xyu[0] == 0.1);
  CHECK(xyu[3 * 79] == 20.0);

  double cost = 0, tail = 0;
  int warn = 0, mono = 0;
  CHECK(akor_trajectory_cost(t, 1, 1, &cost, &warn) == AKOR_OK);
  CHECK(cost > 0);
  CHECK(akor_trajectory_decay(t, &tail, &mono) == AKOR_OK);
  CHECK(mono == 1);
  CHECK(akor_trajectory_cost(t, 0, 1, &cost, &warn) == AKOR_INVALID_ARGUMENT);

  akor_trajectory bad = nullptr;
  CHECK(akor_respond(d, s, 0.05, 1.0, 10, &bad) == AKOR_INVALID_ARGUMENT);

  akor_trajectory_destroy(t);
  akor_solution_destroy(s);
  akor_design_destroy(d);
}

TEST_CASE("fractional exponentials") {
  double re = 0, im = 0;
  CHECK(akor_frac_exp_series(-1, 0, 1, 3, 0, &re, &im) == AKOR_OK);
  CHECK(re == doctest::Approx(0.086545294667743441).epsilon(1e-13));
  CHECK(akor_frac_exp_closed(-1, 0, 1, 3, &re, &im) == AKOR_OK);
  CHECK(re == doctest::Approx(0.086545294667743441).epsilon(1e-10));
  CHECK(akor_weak_singular_integral(0, 0, 1, -0.5, &re, &im) == AKOR_OK);
  CHECK(re == doctest::Approx(2.0 / std::sqrt(M_PI)));
  CHECK(akor_weak_singular_integral(0, 0, 1, -1.5, &re, &im) == AKOR_INVALID_ARGUMENT);
  CHECK(akor_frac_exp_series(-1, 0, -1, 3, 0, &re, &im) == AKOR_INVALID_ARGUMENT);
}

TEST_CASE("null handles are rejected") {
  size_t len = 0;
  CHECK(akor_design_gains(nullptr, nullptr, 0, &len) == AKOR_INVALID_ARGUMENT);
  CHECK(akor_design_create(nullptr, nullptr) == AKOR_INVALID_ARGUMENT);
  CHECK(akor_modes_roots(nullptr, nullptr, 0, &len) == AKOR_INVALID_ARGUMENT);
  akor_design_destroy(nullptr);
  akor_modes_destroy(nullptr);
  akor_solution_destroy(nullptr);
  akor_trajectory_destroy(nullptr);
}
