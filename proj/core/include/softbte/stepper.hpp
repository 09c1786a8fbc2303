#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "softbte/collision.hpp"
#include "softbte/field.hpp"
#include "softbte/moments.hpp"
#include "softbte/transport.hpp"
#include "softbte/weights.hpp"

namespace softbte {

enum class Scheme { kPicard, kHForm };

struct StepperSettings {
  Scheme scheme = Scheme::kPicard;
  /// Picard sweeps per step against the frozen start-of-step data (1 to 5).
  int inner_iterations = 1;
  bool conservation_project = true;
  /// h-form only: drop K and Gamma, leaving the pure nu~ decay.
  bool decay_only = false;

  void validate() const;
};

/// Evolving state of one run. The field is always stored in absolute form.
struct SimulationState {
  double t = 0.0;
  DistributionField field;
  std::size_t steps = 0;
  /// Accumulated mass lost to out-of-grid post-collisional samples and to clipping of
  /// negative transport overshoots (torus average).
  double leakage = 0.0;
  double clipped_mass = 0.0;
  std::size_t projection_fallbacks = 0;
};

/// One time step of the coupled transport + collision system.
class Stepper {
 public:
  Stepper(const CollisionOperator& op, SpatialLayout layout, WeightParams weights, StepperSettings settings);

  const StepperSettings& settings() const noexcept { return settings_; }

  /// Transport over dt, then F <- [F + dt Q+(F*, F*)] / [1 + dt I_{F*}] per slice, with F*
  /// the previous sweep (start-of-step data for the first one).
  void picard_step(SimulationState& state, double dt) const;
  /// h = w f advanced with the exact integrating factor G_v for nu~ and an explicit
  /// K_w h + w Gamma(f, f) source, followed by transport.
  void h_form_step(SimulationState& state, double dt) const;
  void step(SimulationState& state, double dt) const;

 private:
  void transport_and_clip(SimulationState& state, double dt) const;
  void finish_collision(std::span<const double> before, std::span<double> after, SimulationState& state) const;

  const CollisionOperator& op_;
  SpatialLayout layout_;
  WeightParams weights_;
  StepperSettings settings_;
  SpectralTransport transport_;
  ConservationProjector projector_;
};

/// Frozen-time Picard iteration F^{k+1} = [F_n + dt Q+(F^k, F^k)] / [1 + dt I_{F^k}] started
/// from F^0 = mu. Returns the successive sup-norm ratios |F^{k+1} - F^k| / |F^k - F^{k-1}|.
std::vector<double> frozen_picard_ratios(const CollisionOperator& op, std::span<const double> f_n, double dt, int iterations);

}  // namespace softbte
