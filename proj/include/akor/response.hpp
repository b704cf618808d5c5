#pragma once

#include <vector>

#include "akor/fracsol.hpp"
#include "akor/lift.hpp"
#include "akor/synth.hpp"

namespace akor {

struct GridSpec {
  double x_start = 0.0;
  double x_end = 0.0;
  int n = 0;
};

struct Sample {
  double x;
  double y;
  double u;
};

struct Trajectory {
  std::vector<Sample> samples;
  std::int64_t q = 1;
  double x0 = 0.0;
  GridSpec grid;
};

/// Samples y and u = -sum_j K_j D^{j s} y on a uniform grid, where s is the
/// synthesis step (1/q for the oscillator lift, p/q for a first-order plant).
Trajectory respond(const ClosedLoop& cl, const SolutionRepresentation& rep,
                   const RegulatorLaw& law, const GridSpec& grid);

struct CostEstimate {
  double value = 0.0;
  /// Integrand at the last sample exceeds kCostTailThreshold: the window is
  /// too short for the estimate to stand in for the infinite-horizon cost.
  bool tail_warning = false;
};

inline constexpr double kCostTailThreshold = 1e-6;

/// 1/2 * trapezoid(qw y^2 + rw u^2) over the samples.
CostEstimate cost(const Trajectory& traj, const CostWeights& w);

struct DecayMetric {
  /// max |y| over the last quarter of the samples.
  double sup_tail = 0.0;
  /// max |y| over successive quarters never increases.
  bool monotone_envelope = false;
};

DecayMetric decay_metric(const Trajectory& traj);

}  // namespace akor
