#include "akor/lift.hpp"

#include <cmath>

#include "akor/error.hpp"

namespace akor {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be finite");
  }
}

}  // namespace

PlantCoefficients plant_coeffs(const PlantParams& params) {
  if (const auto* direct = std::get_if<DirectPlant>(&params)) {
    require_finite(direct->a, "a");
    require_finite(direct->b, "b");
    if (direct->a < 0.0 || direct->b < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "plant coefficients a, b must be nonnegative");
    }
    return {direct->a, direct->b};
  }
  const auto& phys = std::get<PhysicalPlant>(params);
  for (double v : {phys.m, phys.s, phys.rho, phys.mu, phys.k}) require_finite(v, "plant parameter");
  if (phys.m <= 0.0) throw Error(ErrorCode::InvalidArgument, "mass m must be positive");
  if (phys.mu * phys.rho < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "viscosity-density product mu*rho must be nonnegative");
  }
  if (phys.s < 0.0 || phys.k < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "plate area s and spring constant k must be nonnegative");
  }
  return {2.0 * phys.s * std::sqrt(phys.mu * phys.rho) / phys.m, phys.k / phys.m};
}

void validate(const CostWeights& w) {
  if (!(w.qw > 0.0) || !(w.rw > 0.0) || !std::isfinite(w.qw) || !std::isfinite(w.rw)) {
    throw Error(ErrorCode::InvalidArgument, "cost weights qw, rw must be positive and finite");
  }
}

LiftedSystem build_lifted(double a, double b, const OddRationalOrder& order,
                          const CostWeights& w) {
  require_finite(a, "a");
  require_finite(b, "b");
  validate(w);
  const Eigen::Index n = 2 * order.q();
  LiftedSystem sys{.kind = PlantKind::SecondOrder,
                   .order = order,
                   .F = Eigen::MatrixXd::Zero(n, n),
                   .G = Eigen::VectorXd::Zero(n),
                   .Q = Eigen::MatrixXd::Zero(n, n),
                   .R = w.rw,
                   .a = a,
                   .b = b};
  for (Eigen::Index i = 0; i + 1 < n; ++i) sys.F(i, i + 1) = 1.0;
  sys.F(n - 1, 0) -= b;
  sys.F(n - 1, order.p()) -= a;
  sys.G(n - 1) = 1.0;
  sys.Q(0, 0) = w.qw;
  return sys;
}

LiftedSystem build_first_order(double beta, const OddRationalOrder& order,
                               const CostWeights& w) {
  require_finite(beta, "beta");
  validate(w);
  return LiftedSystem{.kind = PlantKind::FirstOrder,
                      .order = order,
                      .F = Eigen::MatrixXd::Constant(1, 1, beta),
                      .G = Eigen::VectorXd::Ones(1),
                      .Q = Eigen::MatrixXd::Constant(1, 1, w.qw),
                      .R = w.rw,
                      .a = 0.0,
                      .b = -beta};
}

std::vector<double> open_loop_charpoly(const LiftedSystem& sys) {
  if (sys.kind == PlantKind::FirstOrder) {
    const auto p = static_cast<std::size_t>(sys.order.p());
    std::vector<double> coeffs(p + 1, 0.0);
    coeffs[0] = 1.0;
    coeffs[p] = sys.b;
    return coeffs;
  }
  const auto n = static_cast<std::size_t>(sys.dimension());
  const auto p = static_cast<std::size_t>(sys.order.p());
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[0] = 1.0;
  coeffs[n - p] += sys.a;
  coeffs[n] += sys.b;
  return coeffs;
}

InitialConditions oscillator_initial_conditions(double x0, double y1,
                                                const OddRationalOrder& order) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw Error(ErrorCode::InvalidArgument, "initial point x0 must be positive");
  }
  require_finite(y1, "y1");
  InitialConditions ics{x0, std::vector<double>(static_cast<std::size_t>(2 * order.q()), 0.0)};
  ics.values[static_cast<std::size_t>(order.q())] = y1;
  return ics;
}

}  // namespace akor
