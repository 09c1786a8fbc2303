#include "softbte/velocity_grid.hpp"

#include <cmath>
#include <string>

#include "softbte/errors.hpp"
#include "softbte/maxwellian.hpp"

namespace softbte {

VelocityGrid::VelocityGrid(double radius, int n_per_dim) : radius_(radius), n_(n_per_dim), h_(0.0) {
  if (!(radius > 0.0)) throw ConfigError("grid.radius must be positive");
  // mu/exp(-|v|^2/2) must stay representable at the cube corners for the weighted interpolation
  if (radius > 20.0) throw ConfigError("grid.radius must not exceed 20 (Maxwellian underflows at the corners)");
  if (n_per_dim < 8) throw ConfigError("grid.n = " + std::to_string(n_per_dim) + " violates N >= 8");
  if (n_per_dim > 64) throw ConfigError("grid.n = " + std::to_string(n_per_dim) + " exceeds the supported maximum 64");
  h_ = 2.0 * radius / n_per_dim;
}

double VelocityGrid::maxwellian_mass_defect() const {
  GridTables t(*this);
  return std::abs(1.0 - integrate(t.mu.data()));
}

double VelocityGrid::integrate(const double* values) const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += values[i];
  return s * cell_volume();
}

GridTables::GridTables(const VelocityGrid& grid) {
  const std::size_t n = grid.size();
  mu.resize(n);
  sqrt_mu.resize(n);
  speed2.resize(n);
  nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = grid.node(i);
    speed2[i] = norm2(nodes[i]);
    mu[i] = maxwellian_of_speed2(speed2[i]);
    sqrt_mu[i] = std::sqrt(kMaxwellianNorm) * std::exp(-0.25 * speed2[i]);
  }
}

}  // namespace softbte
