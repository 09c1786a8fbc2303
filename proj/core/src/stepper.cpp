#include "softbte/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "softbte/errors.hpp"

namespace softbte {

void StepperSettings::validate() const {
  if (inner_iterations < 1 || inner_iterations > 5) {
    throw ConfigError("stepper.inner_iterations = " + std::to_string(inner_iterations) + " must lie in [1, 5]");
  }
}

Stepper::Stepper(const CollisionOperator& op, SpatialLayout layout, WeightParams weights, StepperSettings settings)
    : op_(op), layout_(layout), weights_(weights), settings_(settings), transport_(op.grid(), layout), projector_(op.grid()) {
  settings_.validate();
  weights_.validate(op.params());
}

void Stepper::transport_and_clip(SimulationState& state, double dt) const {
  transport_.apply(state.field, dt);
  if (layout_.kind == LayoutKind::kHomogeneous) return;
  // Trigonometric interpolation can undershoot slightly where F is steep in x.
  double clipped = 0.0;
  for (double& v : state.field.values()) {
    if (v < 0.0) {
      clipped += -v;
      v = 0.0;
    }
  }
  clipped *= op_.grid().cell_volume() / state.field.slices();
  state.clipped_mass += clipped;
  state.leakage += clipped;
}

void Stepper::finish_collision(std::span<const double> before, std::span<double> after, SimulationState& state) const {
  if (!settings_.conservation_project) return;
  std::vector<double> inc(after.size());
  for (std::size_t i = 0; i < inc.size(); ++i) inc[i] = after[i] - before[i];
  const std::vector<double> c = projector_.correction(inc);
  bool positive = true;
  for (std::size_t i = 0; i < inc.size() && positive; ++i) positive = after[i] - c[i] >= 0.0;
  if (!positive) {
    ++state.projection_fallbacks;
    return;
  }
  for (std::size_t i = 0; i < inc.size(); ++i) after[i] -= c[i];
}

void Stepper::picard_step(SimulationState& state, double dt) const {
  if (!(dt > 0.0)) throw ConfigError("time step dt must be positive");
  transport_and_clip(state, dt);
  const std::size_t m = op_.grid().size();
  double leaked = 0.0;
  for (int ix = 0; ix < state.field.slices(); ++ix) {
    auto slice = state.field.slice(ix);
    const std::vector<double> start(slice.begin(), slice.end());
    std::vector<double> current = start;
    std::vector<double> next(m);
    for (int k = 0; k < settings_.inner_iterations; ++k) {
      CollisionDiagnostics diag;
      const std::vector<double> gain = op_.gain(current, current, &diag);
      const std::vector<double> freq = op_.loss_frequency(current);
      for (std::size_t i = 0; i < m; ++i) next[i] = (start[i] + dt * gain[i]) / (1.0 + dt * freq[i]);
      if (k == settings_.inner_iterations - 1) leaked += diag.leakage * dt;
      current.swap(next);
    }
    finish_collision(start, current, state);
    std::copy(current.begin(), current.end(), slice.begin());
  }
  state.leakage += leaked / state.field.slices();
  ++state.steps;
  state.t += dt;
}

void Stepper::h_form_step(SimulationState& state, double dt) const {
  if (!(dt > 0.0)) throw ConfigError("time step dt must be positive");
  const auto& tab = op_.tables();
  const auto& nu = op_.nu();
  const std::size_t m = op_.grid().size();
  const double t0 = state.t;
  const double t1 = t0 + dt;
  const std::vector<double> w0 = weight_table(op_.grid(), t0, weights_);
  const std::vector<double> w1 = weight_table(op_.grid(), t1, weights_);
  std::vector<double> g(m), phi(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double e = semigroup_exponent(nu[i], tab.speed2[i], t0, t1, weights_);
    g[i] = std::exp(-e);
    // (1 - G)/nu~_avg with nu~_avg = e/dt, i.e. dt (1 - e^{-e})/e
    phi[i] = e > 1e-12 ? dt * -std::expm1(-e) / e : dt;
  }
  double leaked = 0.0;
  for (int ix = 0; ix < state.field.slices(); ++ix) {
    auto slice = state.field.slice(ix);
    const std::vector<double> start(slice.begin(), slice.end());
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) f[i] = (start[i] - tab.mu[i]) / tab.sqrt_mu[i];
    std::vector<double> src(m, 0.0);
    if (!settings_.decay_only) {
      CollisionDiagnostics diag;
      const std::vector<double> kf = op_.apply_K(f);
      const std::vector<double> gam = op_.gamma_nl(f, f, &diag);
      for (std::size_t i = 0; i < m; ++i) src[i] = w0[i] * (kf[i] + gam[i]);
      leaked += diag.leakage * dt;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const double h = w0[i] * f[i];
      const double h1 = g[i] * h + phi[i] * src[i];
      slice[i] = tab.mu[i] + tab.sqrt_mu[i] * (h1 / w1[i]);
    }
    if (!settings_.decay_only) finish_collision(start, slice, state);
  }
  state.leakage += leaked / state.field.slices();
  transport_and_clip(state, dt);
  ++state.steps;
  state.t = t1;
}

void Stepper::step(SimulationState& state, double dt) const {
  if (settings_.scheme == Scheme::kHForm) {
    h_form_step(state, dt);
  } else {
    picard_step(state, dt);
  }
}

std::vector<double> frozen_picard_ratios(const CollisionOperator& op, std::span<const double> f_n, double dt, int iterations) {
  if (!(dt > 0.0)) throw ConfigError("time step dt must be positive");
  const std::size_t m = op.grid().size();
  if (f_n.size() != m) throw GridMismatch("frozen_picard_ratios: array does not match the grid");
  std::vector<double> prev = op.tables().mu;
  std::vector<double> next(m);
  std::vector<double> ratios;
  double last = -1.0;
  for (int k = 0; k < iterations; ++k) {
    const std::vector<double> gain = op.gain(prev, prev);
    const std::vector<double> freq = op.loss_frequency(prev);
    double diff = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (f_n[i] + dt * gain[i]) / (1.0 + dt * freq[i]);
      diff = std::max(diff, std::abs(next[i] - prev[i]));
    }
    if (last > 0.0) ratios.push_back(diff / last);
    last = diff;
    prev.swap(next);
    if (diff == 0.0) break;
  }
  return ratios;
}

}  // namespace softbte
