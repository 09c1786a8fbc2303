#pragma once

#include <memory>
#include <span>
#include <vector>

#include "softbte/collision_quadrature.hpp"
#include "softbte/kernel.hpp"
#include "softbte/model_params.hpp"
#include "softbte/velocity_grid.hpp"

namespace softbte {

/// Side information from one operator application.
struct CollisionDiagnostics {
  /// Mass-weighted pairs whose post-collisional velocities leave the grid
  /// (sum of B G(u) F(v) h^6 over the dropped sphere fraction).
  double leakage = 0.0;
};

/// Output of the cutoff split K = K^chi + K^{1-chi}.
struct KSplit {
  std::vector<double> chi;
  std::vector<double> one_minus_chi;
};

/// Settings of the discrete collision operator.
struct CollisionSettings {
  int sphere_points = 26;
  InterpolationMode interpolation = InterpolationMode::kMaxwellWeighted;
  BoundaryMode boundary = BoundaryMode::kExtend;
};

/// Discrete collision operator on one velocity grid: bilinear Q+-, the perturbative Gamma+-,
/// and the linearised K1, K2, K with their cutoff splits. All inputs are nodal arrays of
/// size grid.size(); every method is const and thread-safe.
class CollisionOperator {
 public:
  CollisionOperator(const VelocityGrid& grid, const ModelParams& params, CollisionSettings settings = {});

  const VelocityGrid& grid() const noexcept { return grid_; }
  const ModelParams& params() const noexcept { return params_; }
  const CollisionSettings& settings() const noexcept { return settings_; }
  const GridTables& tables() const noexcept { return tables_; }
  const KernelTable& kernels() const noexcept { return kernels_; }

  /// Discrete collision frequency nu_h = I_mu.
  const std::vector<double>& nu() const noexcept { return nu_h_; }

  /// I_G(v) = int int B(v-u, w) G(u) dw du using the kernel part `part`.
  std::vector<double> loss_frequency(std::span<const double> g, KernelPart part = KernelPart::kFull) const;
  std::vector<double> loss_frequency(std::span<const double> g, const OffsetKernel& kernel) const;

  std::vector<double> gain(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag = nullptr) const;
  std::vector<double> loss(std::span<const double> g, std::span<const double> f) const;
  /// Q(G, F) = Q+(G, F) - Q-(G, F).
  std::vector<double> collide(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag = nullptr) const;

  /// Gamma(g, f) = Q(sqrt(mu) g, sqrt(mu) f) / sqrt(mu) and its gain / loss parts.
  std::vector<double> gamma_plus(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag = nullptr) const;
  std::vector<double> gamma_minus(std::span<const double> g, std::span<const double> f) const;
  std::vector<double> gamma_nl(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag = nullptr) const;

  std::vector<double> apply_K1(std::span<const double> f, KernelPart part = KernelPart::kFull) const;
  std::vector<double> apply_K2(std::span<const double> f, KernelPart part = KernelPart::kFull, CollisionDiagnostics* diag = nullptr) const;
  std::vector<double> apply_K(std::span<const double> f, CollisionDiagnostics* diag = nullptr) const;
  KSplit apply_K_splits(std::span<const double> f, CollisionDiagnostics* diag = nullptr) const;

  /// K1 and K2 with an arbitrary multiplier table on |v-u| (used by the bound certificates).
  std::vector<double> apply_K1_with(std::span<const double> f, const OffsetKernel& kernel) const;
  std::vector<double> apply_K2_with(std::span<const double> f, const OffsetKernel& kernel, CollisionDiagnostics* diag = nullptr) const;

  /// Discrete H-theorem production int Q(F, F) ln F dv (F > 0 required).
  double entropy_production(std::span<const double> f) const;

 private:
  void check(std::span<const double> a) const;
  // K2 for several kernel tables sharing one sphere sum.
  void apply_K2_multi(std::span<const double> f, std::span<const OffsetKernel* const> kernels,
                      std::span<std::vector<double>* const> outs, CollisionDiagnostics* diag) const;

  VelocityGrid grid_;
  ModelParams params_;
  CollisionSettings settings_;
  GridTables tables_;
  KernelTable kernels_;
  CollisionQuadrature quadrature_;
  std::vector<double> nu_h_;
  std::vector<double> ones_;
};

}  // namespace softbte
