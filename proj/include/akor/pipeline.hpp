#pragma once

#include <optional>

#include "akor/fracsol.hpp"
#include "akor/lift.hpp"
#include "akor/modal.hpp"
#include "akor/order.hpp"
#include "akor/response.hpp"
#include "akor/riccati.hpp"
#include "akor/synth.hpp"

namespace akor {

/// Everything needed to synthesize a regulator for one plant.
struct DesignRequest {
  PlantKind kind = PlantKind::SecondOrder;
  std::int64_t num = 1;
  std::int64_t den = 3;
  /// Second-order plant coefficients (physical or direct).
  PlantParams plant = DirectPlant{};
  /// First-order plant D^alpha y = beta y + u.
  double beta = 0.0;
  CostWeights weights;
  /// Tolerance for replacing a non-odd order; nullopt refuses such orders.
  std::optional<double> odd_tol = 1e-3;
  RiccatiSolver solver = RiccatiSolver::Spectral;
};

/// Result of order -> lift -> riccati -> synth -> modal.
struct Design {
  RationalOrder requested;
  OddRationalOrder effective;
  LiftedSystem system;
  RiccatiSolution riccati;
  /// Only filled by the spectral solver.
  std::optional<HamiltonianDecomposition> hamiltonian;
  RegulatorLaw law;
  ClosedLoop closed_loop;
  std::vector<double> characteristic;
  ModeSet modes;
  StabilityReport stability;
};

Design design(const DesignRequest& req);

/// Oscillator: conditions y(x0) = 0, y'(x0) = value, every
/// other fractional derivative zero. First-order plant: the real mode scaled
/// so that y(x0) = value.
SolutionRepresentation initial_value_solution(const Design& d, double x0, double value);

}  // namespace akor
