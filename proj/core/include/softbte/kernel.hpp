#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "softbte/model_params.hpp"
#include "softbte/velocity_grid.hpp"

namespace softbte {

/// Smooth cutoff chi(r): 0 for r <= eps, 1 for r >= 2 eps, cubic smoothstep in between.
double cutoff_chi(double r, const ModelParams& params);

/// k1(v,u) = 2 pi |v-u|^gamma sqrt(mu(u) mu(v)). Throws SingularPair for u == v.
double kernel_k1(Vec3 v, Vec3 u, const ModelParams& params);

/// Which part of the kernel an offset table represents.
enum class KernelPart { kFull, kChi, kOneMinusChi };

/// Effective values of |x|^gamma m(|x|) on grid offsets x = g h, g in [-(N-1), N-1]^3.
///
/// The table is built so that int |v-u|^gamma m(|v-u|) phi(u) du ~ sum_u W(v-u) phi(u) h^3.
/// Offsets with |g|_inf <= near_radius use cell averages of |x|^gamma m over the cube cell;
/// the self cell (g = 0) uses the exact radial integral over the ball of volume h^3. All
/// other offsets take the centre value.
class OffsetKernel {
 public:
  using Multiplier = std::function<double(double)>;

  /// `kinks` lists radii where the multiplier is not smooth (the cutoff ramp ends).
  OffsetKernel(const VelocityGrid& grid, double gamma, const Multiplier& multiplier,
               std::vector<double> kinks = {}, int near_radius = 0);

  int n() const noexcept { return n_; }
  int extent() const noexcept { return 2 * n_ - 1; }
  double operator()(int gx, int gy, int gz) const noexcept {
    return values_[offset_index(gx, gy, gz)];
  }
  std::size_t offset_index(int gx, int gy, int gz) const noexcept {
    const std::size_t m = static_cast<std::size_t>(extent());
    return static_cast<std::size_t>(gx + n_ - 1) + m * (static_cast<std::size_t>(gy + n_ - 1) + m * static_cast<std::size_t>(gz + n_ - 1));
  }
  const std::vector<double>& values() const noexcept { return values_; }
  /// Largest |g|_inf with a nonzero entry (used to skip empty offsets).
  int support_radius() const noexcept { return support_radius_; }

 private:
  int n_;
  int support_radius_ = 0;
  std::vector<double> values_;
};

/// Precomputed kernel data on a grid: full, chi and (1 - chi) offset tables plus
/// pointwise access to k1 and chi on node pairs.
class KernelTable {
 public:
  KernelTable(const VelocityGrid& grid, const ModelParams& params, int near_radius = 0);

  const VelocityGrid& grid() const noexcept { return grid_; }
  const ModelParams& params() const noexcept { return params_; }
  const OffsetKernel& part(KernelPart p) const noexcept;

  /// k1 on a node pair, singularity-aware on the diagonal (uses the self-cell average).
  double k1(std::size_t iv, std::size_t iu) const;
  double chi(std::size_t iv, std::size_t iu) const;

 private:
  VelocityGrid grid_;
  ModelParams params_;
  std::vector<double> sqrt_mu_;
  OffsetKernel full_;
  OffsetKernel chi_;
  OffsetKernel one_minus_chi_;
};

}  // namespace softbte
