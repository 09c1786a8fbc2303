#pragma once

#include <memory>

#include "softbte/field.hpp"

namespace softbte {

/// Free transport d_t F + v_x d_x F = 0 on a periodic slab, solved exactly per velocity by a
/// spectral (trigonometric interpolation) shift of x by v_x dt. Homogeneous fields are left
/// untouched.
class SpectralTransport {
 public:
  SpectralTransport(const VelocityGrid& grid, SpatialLayout layout);
  ~SpectralTransport();
  SpectralTransport(const SpectralTransport&) = delete;
  SpectralTransport& operator=(const SpectralTransport&) = delete;

  void apply(DistributionField& field, double dt) const;

 private:
  struct Plans;
  VelocityGrid grid_;
  SpatialLayout layout_;
  std::unique_ptr<Plans> plans_;
};

/// Convenience wrapper building a one-off transport.
void transport_step(DistributionField& field, double dt);

}  // namespace softbte
