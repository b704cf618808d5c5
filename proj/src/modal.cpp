#include "akor/modal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "akor/error.hpp"
#include "akor/riccati.hpp"
#include "complex_util.hpp"

namespace akor {

namespace {

constexpr int kPolishSteps = 3;

std::complex<double> poly_derivative(std::span<const double> coeffs, std::complex<double> z) {
  const std::size_t deg = coeffs.size() - 1;
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < deg; ++i) {
    acc = acc * z + coeffs[i] * static_cast<double>(deg - i);
  }
  return acc;
}

std::complex<double> polish(std::span<const double> coeffs, std::complex<double> z) {
  double best = std::abs(poly_eval(coeffs, z));
  for (int it = 0; it < kPolishSteps && best > 0.0; ++it) {
    const auto d = poly_derivative(coeffs, z);
    if (d == 0.0) break;
    const auto trial = z - poly_eval(coeffs, z) / d;
    const double r = std::abs(poly_eval(coeffs, trial));
    if (!(r < best)) break;
    z = trial;
    best = r;
  }
  return z;
}

Verdict verdict_for(const std::vector<double>& reals, double margin) {
  bool marginal = false;
  for (double r : reals) {
    if (r > margin) return Verdict::Fails;
    if (r >= -margin) marginal = true;
  }
  return marginal ? Verdict::Marginal : Verdict::Holds;
}

}  // namespace

std::complex<double> poly_eval(std::span<const double> coeffs, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (double c : coeffs) acc = acc * z + c;
  return acc;
}

std::vector<double> char_poly(const ClosedLoop& cl) {
  std::vector<double> out;
  out.reserve(cl.coeffs.size() + 1);
  out.push_back(1.0);
  out.insert(out.end(), cl.coeffs.rbegin(), cl.coeffs.rend());
  return out;
}

ModeSet poly_roots(std::span<const double> monic, std::int64_t q, double min_gap) {
  if (monic.size() < 2) throw Error(ErrorCode::InvalidArgument, "polynomial degree must be at least 1");
  if (monic[0] != 1.0) throw Error(ErrorCode::InvalidArgument, "polynomial must be monic");
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "denominator q must be positive");
  for (double c : monic) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "polynomial coefficients must be finite");
  }

  const auto deg = static_cast<Eigen::Index>(monic.size() - 1);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (Eigen::Index i = 0; i + 1 < deg; ++i) companion(i, i + 1) = 1.0;
  for (Eigen::Index j = 0; j < deg; ++j) {
    companion(deg - 1, j) = -monic[static_cast<std::size_t>(deg - j)];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> eig(companion, /*computeEigenvectors=*/false);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "companion eigenvalue computation failed");
  }

  ModeSet modes;
  modes.q = q;
  for (Eigen::Index i = 0; i < deg; ++i) {
    const auto z = eig.eigenvalues()(i);
    if (z.imag() == 0.0) {
      modes.roots.push_back(polish(monic, z));
      modes.roots.back().imag(0.0);
    } else if (z.imag() > 0.0) {
      const auto r = polish(monic, z);
      modes.roots.push_back(r);
      modes.roots.push_back(std::conj(r));
    }
  }
  if (static_cast<Eigen::Index>(modes.roots.size()) != deg) {
    throw Error(ErrorCode::NoConvergence, "companion spectrum is not closed under conjugation");
  }
  sort_spectrum(modes.roots);

  for (std::size_t i = 0; i < modes.roots.size(); ++i) {
    for (std::size_t j = i + 1; j < modes.roots.size(); ++j) {
      if (std::abs(modes.roots[i] - modes.roots[j]) < min_gap) {
        std::ostringstream msg;
        msg << "roots " << i << " and " << j << " are closer than " << min_gap;
        throw Error(ErrorCode::DegenerateRoots, msg.str());
      }
    }
  }

  modes.flags.reserve(modes.roots.size());
  for (const auto& r : modes.roots) {
    modes.flags.push_back({r.real() < 0.0, detail::ipow(r, q).real() < 0.0});
  }
  return modes;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Marginal: return "marginal";
  }
  return "unknown";
}

StabilityReport classify_stability(const ModeSet& modes, double margin) {
  std::vector<double> re;
  std::vector<double> re_pow;
  StabilityReport report;
  for (std::size_t i = 0; i < modes.roots.size(); ++i) {
    const auto& r = modes.roots[i];
    const double rp = detail::ipow(r, modes.q).real();
    re.push_back(r.real());
    re_pow.push_back(rp);
    if (std::abs(r.real()) <= margin || std::abs(rp) <= margin) report.marginal_roots.push_back(i);
  }
  report.paper_criterion = verdict_for(re, margin);
  report.mode_decay = verdict_for(re_pow, margin);
  return report;
}

std::vector<std::complex<double>> poly_from_roots(std::span<const std::complex<double>> roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
  }
  return c;
}

std::vector<double> numeric_charpoly(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  Eigen::EigenSolver<Eigen::MatrixXd> eig(A, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> ev(eig.eigenvalues().data(),
                                       eig.eigenvalues().data() + eig.eigenvalues().size());
  const auto c = poly_from_roots(ev);
  std::vector<double> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(v.real());
  return out;
}

}  // namespace akor
