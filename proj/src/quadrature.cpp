#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "akor/error.hpp"

namespace akor::detail {

namespace {

QuadratureRule compute_gauss_jacobi(int n, double alpha, double beta) {
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double kk = k;
    const double t = 2.0 * kk + ab;
    diag(k) = (beta * beta - alpha * alpha) / (t * (t + 2.0));
    sub(k - 1) = std::sqrt(4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) /
                           (t * t * (t + 1.0) * (t - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1 || !(alpha > -1.0) || !(beta > -1.0)) {
    throw Error(ErrorCode::InvalidArgument, "Gauss-Jacobi needs n >= 1 and alpha, beta > -1");
  }
  thread_local std::map<std::tuple<int, double, double>, QuadratureRule> cache;
  const auto key = std::make_tuple(n, alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_gauss_jacobi(n, alpha, beta)).first;
  return it->second;
}

std::complex<double> scaled_upper_gamma(double a, std::complex<double> z) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 100000;
  std::complex<double> b = z + 1.0 - a;
  std::complex<double> c = 1.0 / kTiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const auto del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw Error(ErrorCode::NoConvergence, "incomplete gamma continued fraction did not converge");
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

}  // namespace akor::detail
