#include "akor/fracsol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "akor/error.hpp"
#include "complex_util.hpp"
#include "mp_complex.hpp"
#include "quadrature.hpp"

namespace akor {

namespace {

using cd = std::complex<double>;

constexpr long kMaxSeriesTerms = 100'000;
constexpr mpfr_prec_t kGuardBits = 128;
constexpr int kQuadNodes = 20;
// e^{-46} ~ 1e-20: the kernel is negligible past this many decay lengths.
constexpr double kDecayCut = 46.0;
// Panel width times |mu|; keeps e^{mu t} well resolved by 20 nodes.
constexpr double kPanelScale = 4.0;
constexpr long kMaxPanels = 200'000;
// |mu x| from which the continued-fraction split is used when Re mu > 0.
constexpr double kSplitThreshold = 2.0;

void require_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "evaluation point x must be positive and finite");
  }
}

void require_q(std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "denominator q must be positive");
}

struct SeriesResult {
  cd value;
  long max_log2 = LONG_MIN;
  long sum_log2 = LONG_MIN;
};

// sum_{j >= -(q-1)-shift} lambda^{j+shift+q-1} x^{j/q} / Gamma(j/q + 1).
SeriesResult sum_series(cd lambda, double x, std::int64_t q, std::int64_t shift, double tol,
                        mpfr_prec_t prec) {
  using detail::MpComplex;
  using detail::MpReal;

  const std::int64_t j_first = -(q - 1) - shift;
  const long log2_tol = static_cast<long>(std::floor(std::log2(tol)));

  MpComplex lam(prec, lambda);
  MpReal xr(prec, x);
  MpReal tmp(prec);
  MpReal expo(prec);

  // mu * x * q, the recurrence factor term_j = term_{j-q} * (mu x q) / j.
  MpComplex mu_xq(prec);
  mu_xq.set_one();
  for (std::int64_t i = 0; i < q; ++i) mu_xq.mul(lam);
  mu_xq.mul(xr);
  mu_xq.mul_si(static_cast<long>(q));
  const double mu_x = std::abs(detail::ipow(lambda, q)) * x;

  MpComplex sum(prec);
  std::vector<MpComplex> ring(static_cast<std::size_t>(q), MpComplex(prec));
  MpComplex term(prec);
  MpComplex lam_pow(prec);

  SeriesResult out;
  int small_run = 0;
  for (std::int64_t j = j_first;; ++j) {
    if (j - j_first > kMaxSeriesTerms) {
      throw Error(ErrorCode::NoConvergence, "fractional-exponential series exceeded 1e5 terms");
    }
    auto& slot = ring[static_cast<std::size_t>(((j - j_first) % q + q) % q)];
    if (j <= 0) {
      // Direct evaluation: lambda^{j+shift+q-1} x^{j/q} / Gamma(j/q + 1).
      const std::int64_t power = j + shift + q - 1;
      const bool pole = (j % q == 0) && (j / q + 1 <= 0);
      if (pole || (power > 0 && lambda == cd(0.0))) {
        term.set_zero();
      } else {
        term.set_one();
        for (std::int64_t i = 0; i < power; ++i) term.mul(lam);
        mpfr_set_si(expo.get(), static_cast<long>(j), MPFR_RNDN);
        mpfr_div_si(expo.get(), expo.get(), static_cast<long>(q), MPFR_RNDN);
        mpfr_pow(tmp.get(), xr.get(), expo.get(), MPFR_RNDN);
        term.mul(tmp);
        mpfr_add_ui(expo.get(), expo.get(), 1, MPFR_RNDN);
        mpfr_gamma(tmp.get(), expo.get(), MPFR_RNDN);
        mpfr_ui_div(tmp.get(), 1, tmp.get(), MPFR_RNDN);
        term.mul(tmp);
      }
    } else {
      term.set(slot);  // term_{j-q}
      term.mul(mu_xq);
      term.div_si(static_cast<long>(j));
    }
    slot.set(term);
    sum.add(term);

    const long t_log2 = term.log2_magnitude();
    out.max_log2 = std::max(out.max_log2, t_log2);
    const long s_log2 = sum.log2_magnitude();
    const bool negligible = term.is_zero() || (s_log2 != LONG_MIN && t_log2 < s_log2 + log2_tol);
    small_run = negligible ? small_run + 1 : 0;
    const bool past_peak = j >= 1 && static_cast<double>(j) / static_cast<double>(q) > mu_x + 1.0;
    if (small_run >= q && (past_peak || lambda == cd(0.0)) && j >= 0) {
      out.sum_log2 = s_log2;
      break;
    }
  }
  out.value = sum.to_complex();
  return out;
}

cd series_adaptive(cd lambda, double x, std::int64_t q, std::int64_t shift, double tol) {
  require_x(x);
  require_q(q);
  if (shift < 0) throw Error(ErrorCode::InvalidArgument, "derivative shift must be nonnegative");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "series tolerance must be positive");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be finite");
  }
  // The largest term is about e^{|lambda^q| x}; carry that many extra bits.
  const double mu_x = std::abs(detail::ipow(lambda, q)) * x;
  mpfr_prec_t prec = kGuardBits + static_cast<mpfr_prec_t>(std::ceil(mu_x * std::numbers::log2e));
  for (int attempt = 0; attempt < 4; ++attempt) {
    const auto r = sum_series(lambda, x, q, shift, tol, prec);
    if (r.sum_log2 == LONG_MIN) return r.value;
    const long lost = r.max_log2 - r.sum_log2;
    if (lost + 64 <= static_cast<long>(prec)) return r.value;
    prec = static_cast<mpfr_prec_t>(lost) + kGuardBits;
  }
  return sum_series(lambda, x, q, shift, tol, prec).value;
}

// integral = exp_coeff * e^{mu x} + remainder
struct IntegralParts {
  cd exp_coeff;
  cd remainder;
};

bool use_split(cd mu, double x) { return mu.real() > 0.0 && std::abs(mu) * x >= kSplitThreshold; }

cd quadrature_integral(cd mu, double x, double gamma) {
  double end = x;
  if (mu.real() < 0.0) end = std::min(x, kDecayCut / -mu.real());
  const double mag = std::abs(mu);
  double width = mag > 0.0 ? std::min(end, kPanelScale / mag) : end;
  if (end < x && x - end < width) end = x;
  const bool singular_panel = end == x;

  const auto panels = static_cast<long>(std::ceil(end / width - 1e-12));
  if (panels > kMaxPanels) {
    throw Error(ErrorCode::NoConvergence, "weakly singular integral needs too many panels");
  }
  width = end / static_cast<double>(panels);

  const auto& legendre = detail::gauss_legendre(kQuadNodes);
  cd acc = 0.0;
  const long regular = singular_panel ? panels - 1 : panels;
  for (long k = 0; k < regular; ++k) {
    const double a = static_cast<double>(k) * width;
    const double half = 0.5 * width;
    const double mid = a + half;
    cd panel = 0.0;
    for (std::size_t i = 0; i < legendre.nodes.size(); ++i) {
      const double t = mid + half * legendre.nodes[i];
      panel += legendre.weights[i] * std::exp(mu * t) * std::pow(x - t, gamma);
    }
    acc += half * panel;
  }
  if (singular_panel) {
    // Last panel [x - w, x] with the (x - t)^gamma weight absorbed.
    const auto& jacobi = detail::gauss_jacobi(kQuadNodes, gamma, 0.0);
    const double start = x - width;
    const double half = 0.5 * width;
    cd panel = 0.0;
    for (std::size_t i = 0; i < jacobi.nodes.size(); ++i) {
      const double t = start + half * (1.0 + jacobi.nodes[i]);
      panel += jacobi.weights[i] * std::exp(mu * t);
    }
    acc += std::pow(half, gamma + 1.0) * panel;
  }
  return acc * detail::rgamma(gamma + 1.0);
}

IntegralParts weak_singular_parts(cd mu, double x, double gamma) {
  if (!(gamma > -1.0) || gamma > 0.0) {
    throw Error(ErrorCode::InvalidArgument, "weak singularity exponent must lie in (-1, 0]");
  }
  require_x(x);
  if (!use_split(mu, x)) return {0.0, quadrature_integral(mu, x, gamma)};
  // e^{mu x} [ mu^{-a} Gamma(a) - mu^{-a} Gamma(a, mu x) ] / Gamma(a), a = gamma + 1,
  // and e^{mu x} mu^{-a} Gamma(a, mu x) = x^a * scaled_upper_gamma(a, mu x).
  const double a = gamma + 1.0;
  const cd tail = std::pow(x, a) * detail::scaled_upper_gamma(a, mu * x);
  return {std::pow(mu, -a), -tail * detail::rgamma(a)};
}

// lambda is the principal q-th root of lambda^q.
bool is_principal_root(cd lambda, std::int64_t q) {
  return std::abs(std::arg(lambda)) < std::numbers::pi / static_cast<double>(q);
}

}  // namespace

std::complex<double> frac_exp_series(std::complex<double> lambda, double x, std::int64_t q,
                                     double tol) {
  return series_adaptive(lambda, x, q, 0, tol);
}

std::complex<double> frac_exp_series_derivative(std::complex<double> lambda, double x,
                                                std::int64_t q, std::int64_t shift, double tol) {
  return series_adaptive(lambda, x, q, shift, tol);
}

std::complex<double> weak_singular_integral(std::complex<double> mu, double x, double gamma) {
  const auto parts = weak_singular_parts(mu, x, gamma);
  if (parts.exp_coeff == cd(0.0)) return parts.remainder;
  return parts.exp_coeff * std::exp(mu * x) + parts.remainder;
}

std::complex<double> frac_exp_closed(std::complex<double> lambda, double x, std::int64_t q) {
  require_x(x);
  require_q(q);
  if (q == 1) return std::exp(lambda * x);

  const cd mu = detail::ipow(lambda, q);
  const double qd = static_cast<double>(q);
  cd algebraic = 0.0;
  cd lambda_s = 1.0;
  for (std::int64_t s = 0; s + 1 < q; ++s) {
    const double gamma = static_cast<double>(s - q + 1) / qd;
    const auto parts = weak_singular_parts(mu, x, gamma);
    algebraic += lambda_s * (std::pow(x, gamma) * detail::rgamma(gamma + 1.0) + mu * parts.remainder);
    lambda_s *= lambda;
  }
  // lambda_s == lambda^{q-1} here. With the split, the exponential parts sum
  // to lambda^{q-1} e^{mu x} * sum_s omega^s over the q-th roots of unity.
  cd exp_weight = lambda_s;
  if (use_split(mu, x)) exp_weight = is_principal_root(lambda, q) ? qd * lambda_s : cd(0.0);
  if (exp_weight == cd(0.0)) return algebraic;
  return algebraic + exp_weight * std::exp(mu * x);
}

Eigen::MatrixXcd ic_matrix(const ModeSet& modes, double x0) {
  require_x(x0);
  const auto n = static_cast<Eigen::Index>(modes.size());
  Eigen::MatrixXcd M(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const cd lam = modes.roots[static_cast<std::size_t>(l)];
    const cd y0 = frac_exp_closed(lam, x0, modes.q);
    if (std::abs(y0) <= kMinModeValue) {
      std::ostringstream msg;
      msg << "mode " << l << " vanishes at x0 = " << x0;
      throw Error(ErrorCode::VanishingModeValue, msg.str());
    }
    cd pw = 1.0;
    for (Eigen::Index m = 0; m < n; ++m) {
      M(m, l) = pw * y0;
      pw *= lam;
    }
  }
  return M;
}

SolutionRepresentation ic_coefficients(const ModeSet& modes, const InitialConditions& ics) {
  if (!(ics.x0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "initial point x0 must be positive");
  if (ics.values.size() != modes.size()) {
    throw Error(ErrorCode::DimensionMismatch, "initial-condition vector must have one entry per mode");
  }
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t j = i + 1; j < modes.size(); ++j) {
      if (std::abs(modes.roots[i] - modes.roots[j]) <= kMinRootGap) {
        throw Error(ErrorCode::DegenerateRoots, "repeated roots make the coefficient system singular");
      }
    }
  }
  const Eigen::MatrixXcd M = ic_matrix(modes, ics.x0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(ics.values.size()));
  for (std::size_t i = 0; i < ics.values.size(); ++i) v(static_cast<Eigen::Index>(i)) = ics.values[i];
  const Eigen::VectorXcd c = M.fullPivLu().solve(v);

  SolutionRepresentation rep{modes, {}, ics.x0, modes.q};
  rep.coefficients.assign(c.data(), c.data() + c.size());
  return rep;
}

std::complex<double> eval_fractional_derivative(const SolutionRepresentation& rep, double x,
                                                std::int64_t j) {
  cd acc = 0.0;
  for (std::size_t l = 0; l < rep.modes.size(); ++l) {
    const cd c = rep.coefficients[l];
    if (c == cd(0.0)) continue;
    const cd lam = rep.modes.roots[l];
    acc += c * detail::ipow(lam, j) * frac_exp_closed(lam, x, rep.q);
  }
  return acc;
}

std::complex<double> eval_solution_complex(const SolutionRepresentation& rep, double x) {
  require_x(x);
  return eval_fractional_derivative(rep, x, 0);
}

double eval_solution(const SolutionRepresentation& rep, double x) {
  return eval_solution_complex(rep, x).real();
}

SolutionRepresentation real_mode_solution(const ModeSet& modes, double x0, double y0) {
  std::size_t pick = modes.size();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes.roots[i].imag() == 0.0) {
      if (pick != modes.size()) {
        throw Error(ErrorCode::InvalidArgument, "more than one real root; real mode is ambiguous");
      }
      pick = i;
    }
  }
  if (pick == modes.size()) throw Error(ErrorCode::InvalidArgument, "no real root to build a real mode from");
  ModeSet single{{modes.roots[pick]}, modes.q, {modes.flags.at(pick)}};
  return ic_coefficients(single, InitialConditions{x0, {y0}});
}

}  // namespace akor
