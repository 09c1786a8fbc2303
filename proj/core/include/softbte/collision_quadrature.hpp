#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "softbte/kernel.hpp"
#include "softbte/sphere_rule.hpp"
#include "softbte/velocity_grid.hpp"

namespace softbte {

/// How off-grid values at post-collisional velocities are reconstructed.
enum class InterpolationMode {
  /// Trilinear interpolation of the field divided by its Maxwellian factor, then multiplied
  /// back by the exact Maxwellian factor; keeps the Maxwellian an exact discrete equilibrium.
  kMaxwellWeighted,
  /// Plain trilinear interpolation of the field values.
  kPlain,
};

/// Treatment of sphere samples outside the node hull.
enum class BoundaryMode {
  /// Nearest-hull-value extension of the interpolated arrays (constant beyond the faces).
  kExtend,
  /// Samples outside contribute zero.
  kDrop,
};

/// One output of a pair sum: a kernel offset table and the array receiving the result.
struct PairSumTarget {
  const OffsetKernel* kernel = nullptr;
  std::span<double> out;
};

/// Pre-collisional products used to weight samples whose post-collisional velocities leave
/// the grid (leakage diagnostic).
struct LeakageInput {
  std::span<const double> at_u;
  std::span<const double> at_v;
  const OffsetKernel* kernel = nullptr;
};

/// Core quadrature over collision partners and scattering directions.
///
/// With q0 = |cos theta|, int_{S^2} |cos theta| Phi(u', v') dw equals (1/2) int_{S^2} Phi dsigma in
/// the centre-of-mass parametrisation v' = c + r sigma, u' = c - r sigma, c = (u+v)/2,
/// r = |v-u|/2. For every node pair the engine evaluates
///
///   out[v] = sum_u W(v-u) pre[u] S(c, r),   S(c, r) = sum_sigma w_sigma A(c - r sigma) B(c + r sigma),
///
/// with A, B trilinearly interpolated. S depends on the pair only through (c, r), so pairs
/// sharing a centre and |v-u| are evaluated once. Sphere samples leaving the node hull are
/// extended or dropped according to the boundary mode; either way their share is reported
/// by the optional leakage tally.
class CollisionQuadrature {
 public:
  CollisionQuadrature(const VelocityGrid& grid, SphereRule rule, BoundaryMode boundary = BoundaryMode::kExtend);

  const VelocityGrid& grid() const noexcept { return grid_; }
  const SphereRule& rule() const noexcept { return rule_; }
  BoundaryMode boundary() const noexcept { return boundary_; }
  std::size_t group_count() const noexcept { return groups_.size(); }

  /// `a` may be empty, meaning A == 1. Every target array is overwritten.
  /// Returns the leakage sum (zero when `leak` is null).
  double pair_sum(std::span<const double> a, std::span<const double> b, std::span<const double> pre,
                  std::span<const PairSumTarget> targets, const LeakageInput* leak = nullptr) const;

 private:
  struct RowSpan {
    std::int16_t my, mz, xlo, xhi;
  };
  struct Group {
    int r2 = 0;
    std::array<int, 3> parity{};
    int max_inf_norm = 0;
    int min_inf_norm = 0;
    std::vector<std::array<int, 3>> members;
    std::vector<RowSpan> rows;
  };

  void build_groups();

  VelocityGrid grid_;
  SphereRule rule_;
  BoundaryMode boundary_;
  int pad_ = 1;
  std::vector<Group> groups_;
};

}  // namespace softbte
