#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "akor/lift.hpp"

namespace akor {

/// Eigenvalues with |Re| at or below this are treated as lying on the
/// imaginary axis.
inline constexpr double kSpectralGapTol = 1e-9;

enum class RiccatiSolver { Spectral, Sign };

const char* to_string(RiccatiSolver solver) noexcept;

struct HamiltonianDecomposition {
  Eigen::MatrixXd H;
  /// Spectrum of the stable block, sorted by (real, imaginary).
  std::vector<std::complex<double>> stable_eigenvalues;
  /// Real basis [T1; T3] of the stable invariant subspace.
  Eigen::MatrixXd T1;
  Eigen::MatrixXd T3;
};

/// Stabilizing solution of S F + F' S - S G R^{-1} G' S + Q = 0.
struct RiccatiSolution {
  Eigen::MatrixXd S;
  double residual = 0.0;
  RiccatiSolver solver = RiccatiSolver::Spectral;
};

struct SpectralRiccati {
  RiccatiSolution solution;
  HamiltonianDecomposition decomposition;
};

/// [[F, -(1/R) G G'], [-Q, -F']].
Eigen::MatrixXd build_hamiltonian(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                                  const Eigen::MatrixXd& Q, double R);
Eigen::MatrixXd build_hamiltonian(const LiftedSystem& sys);

/// S = T3 T1^{-1} from the eigenvectors of the stable half of the Hamiltonian
/// spectrum. Throws ImaginaryAxisEigenvalue or SingularT1.
SpectralRiccati solve_are_spectral(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                                   const Eigen::MatrixXd& Q, double R,
                                   double gap_tol = kSpectralGapTol);
SpectralRiccati solve_are_spectral(const LiftedSystem& sys, double gap_tol = kSpectralGapTol);

/// Newton iteration Z <- (Z + Z^{-1}) / 2 for sign(H), with determinant
/// scaling while far from convergence; S is read off the stable projector.
/// Throws NoConvergence or ImaginaryAxisEigenvalue.
RiccatiSolution solve_are_sign(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                               const Eigen::MatrixXd& Q, double R);
RiccatiSolution solve_are_sign(const LiftedSystem& sys);

/// Frobenius norm of S F + F' S - S G R^{-1} G' S + Q.
double are_residual(const Eigen::MatrixXd& S, const Eigen::MatrixXd& F,
                    const Eigen::VectorXd& G, const Eigen::MatrixXd& Q, double R);
double are_residual(const Eigen::MatrixXd& S, const LiftedSystem& sys);

/// Sorts by real part, then imaginary part.
void sort_spectrum(std::vector<std::complex<double>>& values);

}  // namespace akor
