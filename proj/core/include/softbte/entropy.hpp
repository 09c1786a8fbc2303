#pragma once

#include <span>

#include "softbte/field.hpp"
#include "softbte/velocity_grid.hpp"

namespace softbte {

/// a ln a - a + 1 for a >= 0, accurate near a = 1 and equal to 1 at a = 0.
double entropy_density(double a);

/// Relative entropy int (F/mu ln(F/mu) - F/mu + 1) mu dv of one velocity slice.
double relative_entropy(const VelocityGrid& grid, std::span<const double> f_abs);
/// Spatial average over the slices (torus volume normalised to one). Requires an absolute field.
double relative_entropy(const DistributionField& absolute);

/// H(F) = int F ln F with 0 ln 0 = 0.
double boltzmann_H(const VelocityGrid& grid, std::span<const double> f_abs);
double boltzmann_H(const DistributionField& absolute);

/// A = int 1/4 |f|^2 on {|f| <= sqrt(mu)}, B = int sqrt(mu)/4 |f| on {|f| > sqrt(mu)}.
struct EntropySplit {
  double a = 0.0;
  double b = 0.0;
  double sum() const noexcept { return a + b; }
};

EntropySplit entropy_l2_split(const VelocityGrid& grid, std::span<const double> f_pert);
/// Requires a perturbation field with mu + sqrt(mu) f >= 0.
EntropySplit entropy_l2_split(const DistributionField& perturbation);

}  // namespace softbte
