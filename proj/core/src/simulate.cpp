#include "softbte/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "softbte/errors.hpp"

namespace softbte {

void SimulationConfig::validate() const {
  model.validate();
  weights.validate(model);
  stepper.validate();
  VelocityGrid(radius, n_per_dim);
  if (!(dt > 0.0)) throw ConfigError("time.dt must be positive");
  if (!(t_end >= 0.0)) throw ConfigError("time.t_end must be >= 0");
  if (!(instability_factor > 1.0)) throw ConfigError("run.instability_factor must exceed 1");
  if (layout.kind == LayoutKind::kSlab) SpatialLayout::slab(layout.nx, layout.period);
}

TimeSeriesRow diagnose(const SimulationState& state, const WeightParams& wp) {
  const DistributionField& F = state.field;
  const VelocityGrid& grid = F.grid();
  const GridTables tab(grid);
  const std::vector<double> w = weight_table(grid, state.t, wp);
  TimeSeriesRow row;
  row.t = state.t;
  double l2 = 0.0;
  std::vector<double> f(grid.size());
  for (int ix = 0; ix < F.slices(); ++ix) {
    auto s = F.slice(ix);
    for (std::size_t i = 0; i < s.size(); ++i) {
      f[i] = (s[i] - tab.mu[i]) / tab.sqrt_mu[i];
      row.h_sup = std::max(row.h_sup, std::abs(w[i] * f[i]));
      l2 += f[i] * f[i];
    }
    for (std::size_t i = 0; i < s.size(); ++i) f[i] = std::max(f[i], -tab.sqrt_mu[i]);
    const EntropySplit sp = entropy_l2_split(grid, f);
    row.split.a += sp.a / F.slices();
    row.split.b += sp.b / F.slices();
  }
  row.f_l2 = std::sqrt(l2 * grid.cell_volume() / F.slices());
  row.moments = moments(F);
  // the h-form stepper does not preserve positivity; entropies are taken of max(F, 0)
  const bool negative = std::any_of(F.values().begin(), F.values().end(), [](double v) { return v < 0.0; });
  if (negative) {
    std::vector<double> clipped = F.values();
    for (double& v : clipped) v = std::max(v, 0.0);
    const DistributionField G(grid, F.layout(), Representation::kAbsolute, std::move(clipped));
    row.H = boltzmann_H(G);
    row.rel_entropy = relative_entropy(G);
  } else {
    row.H = boltzmann_H(F);
    row.rel_entropy = relative_entropy(F);
  }
  row.leakage = state.leakage;
  return row;
}

TimeSeriesRecord simulate(const SimulationConfig& config, const std::function<void(const SimulationState&)>& observer) {
  config.validate();
  const VelocityGrid grid(config.radius, config.n_per_dim);
  const CollisionOperator op(grid, config.model, config.collision);
  return simulate(config, op, observer);
}

TimeSeriesRecord simulate(const SimulationConfig& config, const CollisionOperator& op,
                          const std::function<void(const SimulationState&)>& observer) {
  config.validate();
  const VelocityGrid grid(config.radius, config.n_per_dim);
  if (!(op.grid() == grid)) throw GridMismatch("simulate: operator grid differs from the configured grid");
  TimeSeriesRecord record;
  InitialDataInfo info;
  SimulationState state{0.0, make_initial_field(grid, config.layout, config.initial, config.seed, &info), 0, 0.0, 0.0, 0};
  record.clipped_fraction = info.clipped_fraction;
  const Stepper stepper(op, config.layout, config.weights, config.stepper);

  record.rows.push_back(diagnose(state, config.weights));
  if (observer) observer(state);
  const double limit = config.instability_factor * (record.rows.front().h_sup + 1.0);
  const auto steps = static_cast<std::size_t>(std::llround(config.t_end / config.dt));
  for (std::size_t k = 1; k <= steps; ++k) {
    stepper.step(state, config.dt);
    state.t = static_cast<double>(k) * config.dt;
    record.rows.push_back(diagnose(state, config.weights));
    if (observer) observer(state);
    const double hs = record.rows.back().h_sup;
    if (!std::isfinite(hs) || hs > limit) {
      record.unstable = true;
      record.note = "sup|h| = " + std::to_string(hs) + " exceeded the instability limit at t = " + std::to_string(state.t);
      break;
    }
  }
  record.projection_fallbacks = state.projection_fallbacks;
  return record;
}

}  // namespace softbte
