#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "softbte/vec3.hpp"

namespace softbte {

/// Uniform cell-centred discretisation of the velocity cube [-R, R)^3.
///
/// Node (i, j, k) sits at -R + (i + 1/2) h along each axis, h = 2R/N; nodes are stored
/// with i fastest. Every node carries the midpoint weight h^3.
class VelocityGrid {
 public:
  VelocityGrid(double radius, int n_per_dim);

  double radius() const noexcept { return radius_; }
  int n() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double cell_volume() const noexcept { return h_ * h_ * h_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_ * n_; }

  double coord(int i) const noexcept { return -radius_ + (i + 0.5) * h_; }
  std::size_t index(int i, int j, int k) const noexcept {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(n_) * (j + static_cast<std::size_t>(n_) * k);
  }
  std::array<int, 3> unflatten(std::size_t idx) const noexcept {
    const int i = static_cast<int>(idx % n_);
    const int j = static_cast<int>((idx / n_) % n_);
    const int k = static_cast<int>(idx / (static_cast<std::size_t>(n_) * n_));
    return {i, j, k};
  }
  Vec3 node(std::size_t idx) const noexcept {
    const auto [i, j, k] = unflatten(idx);
    return {coord(i), coord(j), coord(k)};
  }

  /// |1 - sum_nodes mu h^3|, the truncation + quadrature defect of the Maxwellian mass.
  double maxwellian_mass_defect() const;

  /// Grid quadrature of a nodal array (sum of values times h^3).
  double integrate(const double* values) const;

  friend bool operator==(const VelocityGrid& a, const VelocityGrid& b) {
    return a.radius_ == b.radius_ && a.n_ == b.n_;
  }

 private:
  double radius_;
  int n_;
  double h_;
};

/// Nodal arrays derived from mu on a grid: mu, sqrt(mu), |v|^2 and the node coordinates.
struct GridTables {
  explicit GridTables(const VelocityGrid& grid);
  std::vector<double> mu;
  std::vector<double> sqrt_mu;
  std::vector<double> speed2;
  std::vector<Vec3> nodes;
};

}  // namespace softbte
