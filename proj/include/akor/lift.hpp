#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "akor/order.hpp"

namespace akor {

/// Rigid plate of mass m and area s in a fluid of density rho and viscosity
/// constant mu, held by a spring of constant k.
struct PhysicalPlant {
  double m = 1.0;
  double s = 0.0;
  double rho = 0.0;
  double mu = 0.0;
  double k = 0.0;
};

/// Damping and stiffness coefficients given directly.
struct DirectPlant {
  double a = 0.0;
  double b = 0.0;
};

using PlantParams = std::variant<PhysicalPlant, DirectPlant>;

struct PlantCoefficients {
  double a;
  double b;
};

/// a = 2 s sqrt(mu rho) / m, b = k / m; direct values pass through.
PlantCoefficients plant_coeffs(const PlantParams& params);

/// Weights of the quadratic cost 1/2 * integral(qw y^2 + rw u^2).
struct CostWeights {
  double qw = 1.0;
  double rw = 1.0;
};

void validate(const CostWeights& w);

enum class PlantKind {
  /// y'' + a D^alpha y + b y = u, lifted with step 1/q to dimension 2q.
  SecondOrder,
  /// D^alpha y = beta y + u, synthesized as a scalar system in D^alpha.
  FirstOrder,
};

/// Normal form D^step z = F z + G u with cost weights Q, R.
struct LiftedSystem {
  PlantKind kind = PlantKind::SecondOrder;
  OddRationalOrder order;
  Eigen::MatrixXd F;
  Eigen::VectorXd G;
  Eigen::MatrixXd Q;
  double R = 1.0;
  /// Plant data kept for the scalar closed-loop equation.
  double a = 0.0;
  double b = 0.0;

  Eigen::Index dimension() const noexcept { return F.rows(); }

  /// Numerator of the lifted derivative step in units of 1/q: 1 for the
  /// oscillator lift, p for a first-order plant.
  std::int64_t step_numerator() const noexcept {
    return kind == PlantKind::SecondOrder ? 1 : order.p();
  }
};

/// Companion lift of y'' + a D^{p/q} y + b y = u. State j holds D^{j/q} y, so
/// the last row of F carries -b in column 0 and -a in column p.
LiftedSystem build_lifted(double a, double b, const OddRationalOrder& order,
                          const CostWeights& w);

/// Scalar system D^{p/q} y = beta y + u; stored with b = -beta.
LiftedSystem build_first_order(double beta, const OddRationalOrder& order,
                               const CostWeights& w);

/// Monic characteristic polynomial of the open loop in the D^{1/q}
/// eigenvariable, highest power first: lambda^{2q} + a lambda^p + b for the
/// oscillator, lambda^p - beta for a first-order plant.
std::vector<double> open_loop_charpoly(const LiftedSystem& sys);

/// D^{m/q} y(x0) for m = 0 .. size-1.
struct InitialConditions {
  double x0 = 0.0;
  std::vector<double> values;
};

/// y(x0) = 0, y'(x0) = y1 and every other fractional derivative zero.
InitialConditions oscillator_initial_conditions(double x0, double y1,
                                                const OddRationalOrder& order);

}  // namespace akor
