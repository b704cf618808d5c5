#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "akor/synth.hpp"

namespace akor {

/// Band around zero inside which a real part counts as marginal.
inline constexpr double kStabilityMargin = 1e-9;
/// Minimum separation of distinct roots.
inline constexpr double kMinRootGap = 1e-7;

struct RootFlags {
  /// Re lambda < 0.
  bool re_negative = false;
  /// Re lambda^q < 0: the exponent of e^{lambda^q x} in the mode.
  bool decay = false;
};

/// Roots of the characteristic polynomial in the D^{1/q} eigenvariable.
struct ModeSet {
  std::vector<std::complex<double>> roots;
  std::int64_t q = 1;
  std::vector<RootFlags> flags;

  std::size_t size() const noexcept { return roots.size(); }
};

/// Monic coefficients [1, c_{N-1}, ..., c_1, c_0].
std::vector<double> char_poly(const ClosedLoop& cl);

/// Companion-matrix eigenvalues, polished by Newton steps on the polynomial,
/// paired into exact conjugates and sorted by (real, imaginary).
/// Throws DegenerateRoots when two roots are closer than `min_gap`.
ModeSet poly_roots(std::span<const double> monic, std::int64_t q, double min_gap = kMinRootGap);

enum class Verdict { Holds, Fails, Marginal };

const char* to_string(Verdict v) noexcept;

struct StabilityReport {
  /// All Re lambda_k < -margin.
  Verdict paper_criterion = Verdict::Fails;
  /// All Re lambda_k^q < -margin.
  Verdict mode_decay = Verdict::Fails;
  /// Indices of roots whose real part (or that of lambda^q) is within the margin.
  std::vector<std::size_t> marginal_roots;
};

StabilityReport classify_stability(const ModeSet& modes, double margin = kStabilityMargin);

/// Coefficients of prod (lambda - r_k), highest power first.
std::vector<std::complex<double>> poly_from_roots(std::span<const std::complex<double>> roots);

/// Characteristic polynomial of a square matrix via its eigenvalues.
std::vector<double> numeric_charpoly(const Eigen::MatrixXd& A);

/// Horner evaluation of a real-coefficient polynomial, highest power first.
std::complex<double> poly_eval(std::span<const double> coeffs, std::complex<double> z);

}  // namespace akor
