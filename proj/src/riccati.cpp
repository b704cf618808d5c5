#include "akor/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "akor/error.hpp"

namespace akor {

namespace {

constexpr int kSignMaxIterations = 100;
constexpr double kSignTolerance = 1e-12;
constexpr double kMinRcond = 1e-14;

void check_dimensions(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                      const Eigen::MatrixXd& Q, double R) {
  const Eigen::Index n = F.rows();
  if (F.cols() != n || G.size() != n || Q.rows() != n || Q.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "F, G, Q dimensions disagree");
  }
  if (!(R > 0.0)) throw Error(ErrorCode::InvalidArgument, "control weight R must be positive");
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& S) { return 0.5 * (S + S.transpose()); }

// log|det Z| from an LU factorization; avoids overflow of det() at n ~ 30.
double log_abs_det(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
  double acc = 0.0;
  const auto& m = lu.matrixLU();
  for (Eigen::Index i = 0; i < m.rows(); ++i) acc += std::log(std::abs(m(i, i)));
  return acc;
}

}  // namespace

const char* to_string(RiccatiSolver solver) noexcept {
  return solver == RiccatiSolver::Spectral ? "spectral" : "sign";
}

void sort_spectrum(std::vector<std::complex<double>>& values) {
  std::sort(values.begin(), values.end(), [](const auto& l, const auto& r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
}

Eigen::MatrixXd build_hamiltonian(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                                  const Eigen::MatrixXd& Q, double R) {
  check_dimensions(F, G, Q, R);
  const Eigen::Index n = F.rows();
  Eigen::MatrixXd H(2 * n, 2 * n);
  H.topLeftCorner(n, n) = F;
  H.topRightCorner(n, n) = -(G * G.transpose()) / R;
  H.bottomLeftCorner(n, n) = -Q;
  H.bottomRightCorner(n, n) = -F.transpose();
  return H;
}

Eigen::MatrixXd build_hamiltonian(const LiftedSystem& sys) {
  return build_hamiltonian(sys.F, sys.G, sys.Q, sys.R);
}

double are_residual(const Eigen::MatrixXd& S, const Eigen::MatrixXd& F,
                    const Eigen::VectorXd& G, const Eigen::MatrixXd& Q, double R) {
  check_dimensions(F, G, Q, R);
  if (S.rows() != F.rows() || S.cols() != F.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "S must match the system dimension");
  }
  const Eigen::VectorXd SG = S * G;
  const Eigen::MatrixXd lhs = S * F + F.transpose() * S - (SG * SG.transpose()) / R + Q;
  return lhs.norm();
}

double are_residual(const Eigen::MatrixXd& S, const LiftedSystem& sys) {
  return are_residual(S, sys.F, sys.G, sys.Q, sys.R);
}

namespace {

// Defective imaginary-axis eigenvalues of H are split by about sqrt(eps) in
// floating point and can slip past the gap test, so the candidate S must
// actually move every closed-loop eigenvalue into the left half-plane.
void require_stabilizing(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                         const Eigen::MatrixXd& S, double R, double gap_tol) {
  const Eigen::MatrixXd Fcl = F - G * (G.transpose() * S) / R;
  Eigen::EigenSolver<Eigen::MatrixXd> eig(Fcl, /*computeEigenvectors=*/false);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "closed-loop eigen-decomposition failed");
  }
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i).real() >= -gap_tol) {
      throw Error(ErrorCode::ImaginaryAxisEigenvalue,
                  "Riccati candidate does not stabilize the closed loop; the Hamiltonian has "
                  "eigenvalues on the imaginary axis");
    }
  }
}

}  // namespace

SpectralRiccati solve_are_spectral(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                                   const Eigen::MatrixXd& Q, double R, double gap_tol) {
  const Eigen::MatrixXd H = build_hamiltonian(F, G, Q, R);
  const Eigen::Index n = F.rows();

  Eigen::EigenSolver<Eigen::MatrixXd> eig(H, /*computeEigenvectors=*/true);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hamiltonian eigen-decomposition failed");
  }
  const Eigen::VectorXcd values = eig.eigenvalues();
  const Eigen::MatrixXcd vectors = eig.eigenvectors();

  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values(i).real()) <= gap_tol) {
      std::ostringstream msg;
      msg << "Hamiltonian eigenvalue " << values(i).real() << (values(i).imag() < 0 ? "" : "+")
          << values(i).imag() << "i lies on the imaginary axis; no stabilizing solution";
      throw Error(ErrorCode::ImaginaryAxisEigenvalue, msg.str());
    }
  }

  // Real basis of the stable subspace: a conjugate pair contributes the real
  // and imaginary parts of one of its eigenvectors.
  Eigen::MatrixXd basis(2 * n, n);
  std::vector<std::complex<double>> stable;
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const auto mu = values(i);
    if (mu.real() >= 0.0) continue;
    stable.push_back(mu);
    if (mu.imag() < 0.0) continue;
    const Eigen::Index needed = mu.imag() == 0.0 ? 1 : 2;
    if (col + needed > n) {
      col = n + 1;
      break;
    }
    basis.col(col++) = vectors.col(i).real();
    if (needed == 2) basis.col(col++) = vectors.col(i).imag();
  }
  if (static_cast<Eigen::Index>(stable.size()) != n || col != n) {
    throw Error(ErrorCode::ImaginaryAxisEigenvalue,
                "Hamiltonian spectrum is not split evenly between the half-planes");
  }

  HamiltonianDecomposition dec;
  dec.H = H;
  dec.T1 = basis.topRows(n);
  dec.T3 = basis.bottomRows(n);
  sort_spectrum(stable);
  dec.stable_eigenvalues = std::move(stable);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(dec.T1.transpose());
  if (!(lu.rcond() > kMinRcond)) {
    throw Error(ErrorCode::SingularT1, "stable subspace basis has a singular T1 block");
  }
  Eigen::MatrixXd S = lu.solve(dec.T3.transpose()).transpose();
  S = symmetrize(S);
  require_stabilizing(F, G, S, R, gap_tol);

  RiccatiSolution sol{S, are_residual(S, F, G, Q, R), RiccatiSolver::Spectral};
  return {std::move(sol), std::move(dec)};
}

SpectralRiccati solve_are_spectral(const LiftedSystem& sys, double gap_tol) {
  return solve_are_spectral(sys.F, sys.G, sys.Q, sys.R, gap_tol);
}

RiccatiSolution solve_are_sign(const Eigen::MatrixXd& F, const Eigen::VectorXd& G,
                               const Eigen::MatrixXd& Q, double R) {
  Eigen::MatrixXd Z = build_hamiltonian(F, G, Q, R);
  const Eigen::Index n = F.rows();
  const double dim = static_cast<double>(2 * n);

  bool scaling = true;
  bool converged = false;
  for (int it = 0; it < kSignMaxIterations; ++it) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Z);
    if (!(lu.rcond() > kMinRcond)) {
      throw Error(ErrorCode::ImaginaryAxisEigenvalue,
                  "sign iteration hit a singular iterate; Hamiltonian has imaginary-axis eigenvalues");
    }
    // Determinant scaling speeds up the early iterations; it is switched off
    // near convergence so that it does not perturb the quadratic phase.
    const double c = scaling ? std::exp(-log_abs_det(lu) / dim) : 1.0;
    Eigen::MatrixXd next = 0.5 * (c * Z + lu.inverse() / c);
    const double change = (next - Z).norm();
    const double size = Z.norm();
    Z = std::move(next);
    if (change <= kSignTolerance * size) {
      converged = true;
      break;
    }
    if (change <= 1e-2 * size) scaling = false;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "matrix sign iteration did not converge in 100 steps");
  }
  if (std::abs(Z.trace()) > 0.5) {
    throw Error(ErrorCode::ImaginaryAxisEigenvalue,
                "sign of the Hamiltonian is unbalanced; stable subspace has the wrong dimension");
  }

  // (Z + I) annihilates the stable subspace spanned by [I; S]:
  // [W12; W22 + I] S = -[W11 + I; W21].
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd lhs(2 * n, n);
  Eigen::MatrixXd rhs(2 * n, n);
  lhs << Z.topRightCorner(n, n), Z.bottomRightCorner(n, n) + I;
  rhs << Z.topLeftCorner(n, n) + I, Z.bottomLeftCorner(n, n);
  Eigen::MatrixXd S = -lhs.colPivHouseholderQr().solve(rhs);
  S = symmetrize(S);
  require_stabilizing(F, G, S, R, kSpectralGapTol);
  return {S, are_residual(S, F, G, Q, R), RiccatiSolver::Sign};
}

RiccatiSolution solve_are_sign(const LiftedSystem& sys) {
  return solve_are_sign(sys.F, sys.G, sys.Q, sys.R);
}

}  // namespace akor
