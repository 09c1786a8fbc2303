#pragma once

#include <cmath>
#include <numbers>

#include "softbte/vec3.hpp"

namespace softbte {

/// (2 pi)^{-3/2}, the Maxwellian normalisation.
inline constexpr double kMaxwellianNorm = 0.063493635934240969;

/// Global Maxwellian mu(v) = (2 pi)^{-3/2} exp(-|v|^2 / 2).
inline double maxwellian(Vec3 v) { return kMaxwellianNorm * std::exp(-0.5 * norm2(v)); }
inline double maxwellian_of_speed2(double s2) { return kMaxwellianNorm * std::exp(-0.5 * s2); }

/// Maxwellian with unit density, zero bulk velocity and temperature T.
inline double maxwellian_with_temperature(Vec3 v, double temperature) {
  const double norm = std::pow(2.0 * std::numbers::pi * temperature, -1.5);
  return norm * std::exp(-0.5 * norm2(v) / temperature);
}

}  // namespace softbte
