#include "akor/response.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "akor/error.hpp"
#include "complex_util.hpp"

namespace akor {

Trajectory respond(const ClosedLoop& cl, const SolutionRepresentation& rep,
                   const RegulatorLaw& law, const GridSpec& grid) {
  if (grid.n < 2) throw Error(ErrorCode::InvalidArgument, "response grid needs at least 2 samples");
  if (!(grid.x_start >= rep.x0) || !(grid.x_end > grid.x_start) || !std::isfinite(grid.x_end)) {
    throw Error(ErrorCode::InvalidArgument, "response grid must satisfy x0 <= x_start < x_end");
  }
  if (rep.coefficients.size() != rep.modes.size()) {
    throw Error(ErrorCode::DimensionMismatch, "solution coefficients do not match its modes");
  }
  const std::int64_t step = cl.kind == PlantKind::SecondOrder ? 1 : cl.order.p();

  Trajectory traj;
  traj.q = rep.q;
  traj.x0 = rep.x0;
  traj.grid = grid;
  traj.samples.resize(static_cast<std::size_t>(grid.n));

  const double h = (grid.x_end - grid.x_start) / static_cast<double>(grid.n - 1);
  const auto dim = law.gains.size();
  std::vector<std::complex<double>> mode_values(rep.modes.size());
  for (int i = 0; i < grid.n; ++i) {
    const double x = i + 1 == grid.n ? grid.x_end : grid.x_start + h * static_cast<double>(i);
    for (std::size_t l = 0; l < rep.modes.size(); ++l) {
      mode_values[l] = rep.coefficients[l] == 0.0
                           ? std::complex<double>(0.0)
                           : rep.coefficients[l] * frac_exp_closed(rep.modes.roots[l], x, rep.q);
    }
    std::complex<double> y = 0.0;
    std::complex<double> u = 0.0;
    for (std::size_t l = 0; l < rep.modes.size(); ++l) {
      y += mode_values[l];
      // D^{j step / q} y contributes lambda^{j step} per mode.
      const auto lam_step = detail::ipow(rep.modes.roots[l], step);
      std::complex<double> pw = 1.0;
      for (Eigen::Index j = 0; j < dim; ++j) {
        u -= law.gains(j) * pw * mode_values[l];
        pw *= lam_step;
      }
    }
    traj.samples[static_cast<std::size_t>(i)] = {x, y.real(), u.real()};
  }
  return traj;
}

CostEstimate cost(const Trajectory& traj, const CostWeights& w) {
  validate(w);
  const auto& s = traj.samples;
  if (s.size() < 2) throw Error(ErrorCode::InvalidArgument, "cost needs at least 2 samples");
  auto integrand = [&](const Sample& p) { return w.qw * p.y * p.y + w.rw * p.u * p.u; };
  double acc = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    acc += 0.5 * (s[i].x - s[i - 1].x) * (integrand(s[i]) + integrand(s[i - 1]));
  }
  return {0.5 * acc, integrand(s.back()) > kCostTailThreshold};
}

DecayMetric decay_metric(const Trajectory& traj) {
  const auto& s = traj.samples;
  if (s.size() < 4) throw Error(ErrorCode::InvalidArgument, "decay metric needs at least 4 samples");
  const std::size_t n = s.size();
  std::array<double, 4> quarter_max{};
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t lo = k * n / 4;
    const std::size_t hi = (k + 1) * n / 4;
    for (std::size_t i = lo; i < hi; ++i) quarter_max[k] = std::max(quarter_max[k], std::abs(s[i].y));
  }
  DecayMetric m;
  m.sup_tail = quarter_max[3];
  m.monotone_envelope = true;
  for (std::size_t k = 1; k < 4; ++k) {
    if (quarter_max[k] > quarter_max[k - 1]) m.monotone_envelope = false;
  }
  return m;
}

}  // namespace akor
