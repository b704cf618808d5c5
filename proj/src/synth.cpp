#include "akor/synth.hpp"

#include "akor/error.hpp"

namespace akor {

RegulatorLaw regulator_gains(const RiccatiSolution& riccati, const LiftedSystem& sys) {
  const Eigen::Index n = sys.dimension();
  if (riccati.S.rows() != n || riccati.S.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "Riccati solution does not match the lifted system");
  }
  return {(riccati.S.transpose() * sys.G) / sys.R, sys.R};
}

ClosedLoop close_loop(const LiftedSystem& sys, const RegulatorLaw& law) {
  const Eigen::Index n = sys.dimension();
  if (law.gains.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "gain row does not match the lifted system");
  }
  ClosedLoop cl{.kind = sys.kind,
                .order = sys.order,
                .F_cl = sys.F - sys.G * law.gains.transpose(),
                .coeffs = {}};

  if (sys.kind == PlantKind::FirstOrder) {
    // D^{p/q} y = (beta - K) y, i.e. lambda^p + (K - beta) in D^{1/q}.
    cl.coeffs.assign(static_cast<std::size_t>(sys.order.p()), 0.0);
    cl.coeffs[0] = sys.b + law.gains(0);
    return cl;
  }

  cl.coeffs.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) cl.coeffs[static_cast<std::size_t>(j)] = law.gains(j);
  cl.coeffs[0] += sys.b;
  cl.coeffs[static_cast<std::size_t>(sys.order.p())] += sys.a;
  return cl;
}

}  // namespace akor
