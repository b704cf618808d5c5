#pragma once

#include <vector>

#include <Eigen/Dense>

#include "akor/lift.hpp"
#include "akor/riccati.hpp"

namespace akor {

/// u = -K z, where z_j = D^{j/q} y for the oscillator lift and z = y for a
/// first-order plant.
struct RegulatorLaw {
  Eigen::VectorXd gains;
  double rw = 1.0;

  double control(const Eigen::VectorXd& z) const { return -gains.dot(z); }
};

/// Closed loop in the synthesis variable plus its scalar equation
/// D^{N/q} y + sum_{j<N} c_j D^{j/q} y = 0, N = degree().
struct ClosedLoop {
  PlantKind kind = PlantKind::SecondOrder;
  OddRationalOrder order;
  /// F - (1/rw) G (G' S).
  Eigen::MatrixXd F_cl;
  /// c_0 .. c_{N-1}.
  std::vector<double> coeffs;

  std::size_t degree() const noexcept { return coeffs.size(); }
};

/// K = (1/rw) * (G' S); for the companion lift this is the last row of S.
RegulatorLaw regulator_gains(const RiccatiSolution& riccati, const LiftedSystem& sys);

ClosedLoop close_loop(const LiftedSystem& sys, const RegulatorLaw& law);

}  // namespace akor
