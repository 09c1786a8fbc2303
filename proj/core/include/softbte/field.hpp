#pragma once

#include <span>
#include <string>
#include <vector>

#include "softbte/velocity_grid.hpp"
#include "softbte/weights.hpp"

namespace softbte {

/// Which unknown a field stores: F, f = (F - mu)/sqrt(mu), or h = w f.
enum class Representation { kAbsolute, kPerturbation, kWeighted };

enum class LayoutKind { kHomogeneous, kSlab };

/// Spatial layout: a single velocity slice, or n_x slices on a periodic interval.
struct SpatialLayout {
  LayoutKind kind = LayoutKind::kHomogeneous;
  int nx = 1;
  double period = 1.0;

  static SpatialLayout homogeneous() { return {}; }
  static SpatialLayout slab(int nx, double period);
  int slices() const noexcept { return kind == LayoutKind::kHomogeneous ? 1 : nx; }
  double dx() const noexcept { return period / slices(); }
  /// Cell-centred x coordinate of slice ix.
  double x(int ix) const noexcept { return (ix + 0.5) * dx(); }
};

std::string to_string(Representation r);

/// Values on (space x velocity) nodes, stored slice-major: values[ix * Nv + iv].
class DistributionField {
 public:
  DistributionField(const VelocityGrid& grid, SpatialLayout layout, Representation rep);
  DistributionField(const VelocityGrid& grid, SpatialLayout layout, Representation rep, std::vector<double> values);

  const VelocityGrid& grid() const noexcept { return grid_; }
  const SpatialLayout& layout() const noexcept { return layout_; }
  Representation representation() const noexcept { return rep_; }
  int slices() const noexcept { return layout_.slices(); }
  std::size_t slice_size() const noexcept { return grid_.size(); }

  std::span<double> slice(int ix) noexcept { return {values_.data() + ix * grid_.size(), grid_.size()}; }
  std::span<const double> slice(int ix) const noexcept { return {values_.data() + ix * grid_.size(), grid_.size()}; }
  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Throws DomainError when an absolute field has a negative or non-finite node.
  void check_admissible() const;
  /// Throws GridMismatch unless both fields share grid and layout.
  void check_compatible(const DistributionField& other) const;

 private:
  VelocityGrid grid_;
  SpatialLayout layout_;
  Representation rep_;
  std::vector<double> values_;
};

/// f = (F - mu)/sqrt(mu).
DistributionField to_perturbation(const DistributionField& absolute);
/// F = mu + sqrt(mu) f.
DistributionField to_absolute(const DistributionField& perturbation);
/// h = w(., t) f.
DistributionField to_weighted(const DistributionField& perturbation, double t, const WeightParams& wp);
/// f = h / w(., t).
DistributionField from_weighted(const DistributionField& weighted, double t, const WeightParams& wp);

/// Nodal weight table w(v_i, t).
std::vector<double> weight_table(const VelocityGrid& grid, double t, const WeightParams& wp);

}  // namespace softbte
