#pragma once

#include <array>
#include <span>
#include <vector>

#include "softbte/field.hpp"
#include "softbte/velocity_grid.hpp"

namespace softbte {

/// Mass, momentum and kinetic energy (1/2 int |v|^2 F) by grid quadrature.
struct MomentVector {
  double mass = 0.0;
  std::array<double, 3> momentum{};
  double energy = 0.0;
};

MomentVector moments(const VelocityGrid& grid, std::span<const double> values);
/// Spatial average over the slices (torus volume normalised to one).
MomentVector moments(const DistributionField& field);

/// Removes the mass, momentum and energy content of nodal increments.
///
/// The correction is mu * sum_k lambda_k psi_k with psi in {1, v1, v2, v3, |v|^2}, i.e. the
/// orthogonal projection in L^2(1/mu) onto mu * span{psi}; the result has zero discrete
/// moments while the correction stays localised where mu lives.
class ConservationProjector {
 public:
  explicit ConservationProjector(const VelocityGrid& grid);

  /// In-place projection of one velocity slice.
  void project(std::span<double> values) const;
  std::vector<double> projected(std::span<const double> values) const;
  /// The correction that `project` would subtract.
  std::vector<double> correction(std::span<const double> values) const;

 private:
  VelocityGrid grid_;
  std::vector<std::array<double, 5>> basis_;  // psi_k at each node
  std::vector<double> mu_;
  std::array<double, 25> gram_inverse_{};
};

}  // namespace softbte
