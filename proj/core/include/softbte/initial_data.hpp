#pragma once

#include <cstdint>
#include <string>

#include "softbte/field.hpp"

namespace softbte {

enum class InitialKind { kEquilibrium, kBump, kShiftedMaxwellian };

/// Initial-data family.
///
/// bump: F0 = mu (1 + amplitude g), clipped at zero, with g(x, v) = cos(mode e.v + phi) times
/// cos(2 pi x / period + phi_x) on a slab. The direction e and phases come from `seed`
/// (seed 0 gives e = (1,0,0) and zero phases).
/// shifted-maxwellian: unit-density Maxwellian with the given temperature.
struct InitialDataSpec {
  InitialKind kind = InitialKind::kEquilibrium;
  double amplitude = 0.1;
  double mode = 1.0;
  double temperature = 1.0;
  /// Remove the mass/momentum/energy content of F0 - mu (torus average) before clipping.
  bool conserve = true;
};

std::string to_string(InitialKind k);
InitialKind parse_initial_kind(const std::string& s);

struct InitialDataInfo {
  /// Fraction of |F0| mass removed by clipping negative values.
  double clipped_fraction = 0.0;
};

DistributionField make_initial_field(const VelocityGrid& grid, SpatialLayout layout, const InitialDataSpec& spec,
                                     std::uint64_t seed, InitialDataInfo* info = nullptr);

}  // namespace softbte
