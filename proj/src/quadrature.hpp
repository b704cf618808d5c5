#pragma once

#include <complex>
#include <vector>

namespace akor::detail {

/// Nodes and weights on [-1, 1] for the weight (1 - s)^alpha (1 + s)^beta.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch on the Jacobi recurrence; cached per (n, alpha, beta) for the
/// calling thread.
const QuadratureRule& gauss_jacobi(int n, double alpha, double beta);

inline const QuadratureRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// e^z z^{-a} Gamma(a, z) by Legendre's continued fraction (modified Lentz).
/// Intended for |z| >= 1 away from the negative real axis.
std::complex<double> scaled_upper_gamma(double a, std::complex<double> z);

/// 1 / Gamma(x), zero at the poles.
double rgamma(double x);

}  // namespace akor::detail
