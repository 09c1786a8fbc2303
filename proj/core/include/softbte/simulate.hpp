#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "softbte/collision.hpp"
#include "softbte/entropy.hpp"
#include "softbte/initial_data.hpp"
#include "softbte/moments.hpp"
#include "softbte/stepper.hpp"

namespace softbte {

/// Everything a run depends on.
struct SimulationConfig {
  ModelParams model;
  WeightParams weights;
  double radius = 8.0;
  int n_per_dim = 24;
  CollisionSettings collision;
  SpatialLayout layout;
  InitialDataSpec initial;
  StepperSettings stepper;
  double dt = 0.05;
  double t_end = 1.0;
  /// Abort when sup|h| exceeds this factor times (initial sup|h| + 1).
  double instability_factor = 1e6;
  std::uint64_t seed = 1;

  /// Cross-field validation; throws ConfigError naming the violated condition.
  void validate() const;
};

/// One recorded time level.
struct TimeSeriesRow {
  double t = 0.0;
  double h_sup = 0.0;
  double f_l2 = 0.0;
  MomentVector moments;
  double H = 0.0;
  double rel_entropy = 0.0;
  double leakage = 0.0;
  EntropySplit split;
};

struct TimeSeriesRecord {
  std::vector<TimeSeriesRow> rows;
  bool unstable = false;
  std::string note;
  double clipped_fraction = 0.0;
  std::size_t projection_fallbacks = 0;
};

/// Diagnostics of the current state at time state.t.
TimeSeriesRow diagnose(const SimulationState& state, const WeightParams& wp);

/// Runs the configured simulation; deterministic given the config (seed included).
/// The optional observer sees every state after it is recorded.
TimeSeriesRecord simulate(const SimulationConfig& config,
                          const std::function<void(const SimulationState&)>& observer = {});

/// Same, reusing an operator already built for config's grid and model.
TimeSeriesRecord simulate(const SimulationConfig& config, const CollisionOperator& op,
                          const std::function<void(const SimulationState&)>& observer = {});

}  // namespace softbte
