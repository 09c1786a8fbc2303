#pragma once

#include <vector>

#include "softbte/vec3.hpp"

namespace softbte {

/// Quadrature rule on the unit sphere; weights sum to one (rule computes the mean).
struct SphereRule {
  std::vector<Vec3> points;
  std::vector<double> weights;
  int degree = 0;

  std::size_t size() const noexcept { return points.size(); }
};

/// Octahedrally symmetric Lebedev rule with the given point count (6, 14, 26, 38 or 50).
/// All rules are centrally symmetric, which the collision quadrature relies on.
SphereRule lebedev_rule(int points);

}  // namespace softbte
