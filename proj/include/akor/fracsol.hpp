#pragma once

#include <complex>
#include <vector>

#include "akor/lift.hpp"
#include "akor/modal.hpp"

namespace akor {

/// Default relative truncation tolerance of the fractional-exponential series.
inline constexpr double kSeriesTolerance = 1e-17;
/// Mode values at x0 at or below this magnitude make the coefficient system singular.
inline constexpr double kMinModeValue = 1e-12;

/// y(x, lambda) = sum_{k >= -(q-1)} lambda^{k+q-1} x^{k/q} / Gamma(k/q + 1),
/// the eigenfunction of the Riemann-Liouville D^{1/q} with eigenvalue lambda.
///
/// Summed in MPFR with a working precision sized to the largest term, so the
/// result keeps full double accuracy even when the terms cancel by many orders
/// of magnitude. Stops once the terms are past their peak and q consecutive
/// terms fall below tol * |partial sum|. Throws NoConvergence beyond 1e5 terms.
std::complex<double> frac_exp_series(std::complex<double> lambda, double x, std::int64_t q,
                                     double tol = kSeriesTolerance);

/// The series with D^{shift/q} applied term by term (Riemann-Liouville power
/// rule, 1/Gamma vanishing at its poles). For shift = 1 the leading term is
/// annihilated and the result is lambda * y(x, lambda). For shift > 1 the RL
/// semigroup law fails, so this is not (D^{1/q})^shift y = lambda^shift y;
/// the lifted states use the latter.
std::complex<double> frac_exp_series_derivative(std::complex<double> lambda, double x,
                                                std::int64_t q, std::int64_t shift,
                                                double tol = kSeriesTolerance);

/// integral_0^x e^{mu t} (x - t)^gamma / Gamma(gamma + 1) dt for -1 < gamma <= 0.
std::complex<double> weak_singular_integral(std::complex<double> mu, double x, double gamma);

/// Closed form of y(x, lambda): power terms, weakly singular integrals and the
/// exponential e^{lambda^q x}. Exponential contributions that cancel
/// analytically (lambda not the principal q-th root of lambda^q) are dropped
/// before summation.
std::complex<double> frac_exp_closed(std::complex<double> lambda, double x, std::int64_t q);

/// y(x) = sum_l c_l y(x, lambda_l).
struct SolutionRepresentation {
  ModeSet modes;
  std::vector<std::complex<double>> coefficients;
  double x0 = 0.0;
  std::int64_t q = 1;
};

/// Solves sum_l c_l lambda_l^m y(x0, lambda_l) = ics.values[m] for
/// m = 0 .. N-1 (the Cramer system c_s = Delta_s / Delta).
/// Throws DegenerateRoots or VanishingModeValue.
SolutionRepresentation ic_coefficients(const ModeSet& modes, const InitialConditions& ics);

/// Vandermonde-times-diagonal matrix M[m][l] = lambda_l^m y(x0, lambda_l).
Eigen::MatrixXcd ic_matrix(const ModeSet& modes, double x0);

/// D^{j/q} y(x) = sum_l c_l lambda_l^j y(x, lambda_l).
std::complex<double> eval_fractional_derivative(const SolutionRepresentation& rep, double x,
                                                std::int64_t j);

std::complex<double> eval_solution_complex(const SolutionRepresentation& rep, double x);

/// Real part of eval_solution_complex.
double eval_solution(const SolutionRepresentation& rep, double x);

/// Single-mode solution of D^{p/q} y = -c0 y: the real root of
/// lambda^p + c0 = 0 (unique for odd p), scaled so y(x0) = y0.
SolutionRepresentation real_mode_solution(const ModeSet& modes, double x0, double y0);

}  // namespace akor
