#include "akor/pipeline.hpp"

#include "akor/error.hpp"

namespace akor {

namespace {

OddRationalOrder effective_order(const RationalOrder& requested, const std::optional<double>& tol) {
  if (requested.is_odd()) return OddRationalOrder::from(requested);
  if (!tol) return OddRationalOrder::from(requested);  // throws NonOddOrder
  return odd_approximate(requested, *tol);
}

}  // namespace

Design design(const DesignRequest& req) {
  const RationalOrder requested = make_order(req.num, req.den);
  const OddRationalOrder effective = effective_order(requested, req.odd_tol);

  LiftedSystem sys = [&] {
    if (req.kind == PlantKind::FirstOrder) return build_first_order(req.beta, effective, req.weights);
    const auto ab = plant_coeffs(req.plant);
    return build_lifted(ab.a, ab.b, effective, req.weights);
  }();

  std::optional<HamiltonianDecomposition> ham;
  RiccatiSolution ric;
  if (req.solver == RiccatiSolver::Spectral) {
    auto res = solve_are_spectral(sys);
    ric = std::move(res.solution);
    ham = std::move(res.decomposition);
  } else {
    ric = solve_are_sign(sys);
  }

  RegulatorLaw law = regulator_gains(ric, sys);
  ClosedLoop cl = close_loop(sys, law);
  std::vector<double> cp = char_poly(cl);
  ModeSet modes = poly_roots(cp, effective.q());
  StabilityReport report = classify_stability(modes);

  return Design{requested, effective, std::move(sys), std::move(ric), std::move(ham),
                std::move(law), std::move(cl), std::move(cp), std::move(modes), std::move(report)};
}

SolutionRepresentation initial_value_solution(const Design& d, double x0, double value) {
  if (d.system.kind == PlantKind::FirstOrder) return real_mode_solution(d.modes, x0, value);
  return ic_coefficients(d.modes, oscillator_initial_conditions(x0, value, d.effective));
}

}  // namespace akor
