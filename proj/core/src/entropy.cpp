#include "softbte/entropy.hpp"

#include <cmath>

#include "softbte/errors.hpp"

namespace softbte {

double entropy_density(double a) {
  if (a < 0.0 || !std::isfinite(a)) throw DomainError("entropy: negative or non-finite density ratio");
  if (a == 0.0) return 1.0;
  const double d = a - 1.0;
  if (std::abs(d) < 1e-3) {
    // sum_{n>=2} (-1)^n d^n / (n (n-1))
    double term = d * d;
    double s = 0.0;
    for (int n = 2; n < 10; ++n) {
      s += (n % 2 == 0 ? 1.0 : -1.0) * term / (n * (n - 1.0));
      term *= d;
    }
    return s;
  }
  return a * std::log(a) - a + 1.0;
}

double relative_entropy(const VelocityGrid& grid, std::span<const double> f_abs) {
  if (f_abs.size() != grid.size()) throw GridMismatch("relative_entropy: array does not match the grid");
  const GridTables t(grid);
  double s = 0.0;
  for (std::size_t i = 0; i < f_abs.size(); ++i) {
    if (f_abs[i] < 0.0) throw DomainError("relative_entropy: negative value at node " + std::to_string(i));
    s += entropy_density(f_abs[i] / t.mu[i]) * t.mu[i];
  }
  return s * grid.cell_volume();
}

double relative_entropy(const DistributionField& absolute) {
  if (absolute.representation() != Representation::kAbsolute) throw DomainError("relative_entropy: expected an absolute field");
  double s = 0.0;
  for (int ix = 0; ix < absolute.slices(); ++ix) s += relative_entropy(absolute.grid(), absolute.slice(ix));
  return s / absolute.slices();
}

double boltzmann_H(const VelocityGrid& grid, std::span<const double> f_abs) {
  if (f_abs.size() != grid.size()) throw GridMismatch("boltzmann_H: array does not match the grid");
  double s = 0.0;
  for (std::size_t i = 0; i < f_abs.size(); ++i) {
    if (f_abs[i] < 0.0) throw DomainError("boltzmann_H: negative value at node " + std::to_string(i));
    if (f_abs[i] > 0.0) s += f_abs[i] * std::log(f_abs[i]);
  }
  return s * grid.cell_volume();
}

double boltzmann_H(const DistributionField& absolute) {
  if (absolute.representation() != Representation::kAbsolute) throw DomainError("boltzmann_H: expected an absolute field");
  double s = 0.0;
  for (int ix = 0; ix < absolute.slices(); ++ix) s += boltzmann_H(absolute.grid(), absolute.slice(ix));
  return s / absolute.slices();
}

EntropySplit entropy_l2_split(const VelocityGrid& grid, std::span<const double> f_pert) {
  if (f_pert.size() != grid.size()) throw GridMismatch("entropy_l2_split: array does not match the grid");
  const GridTables t(grid);
  EntropySplit out;
  for (std::size_t i = 0; i < f_pert.size(); ++i) {
    const double f = f_pert[i];
    const double sm = t.sqrt_mu[i];
    if (f < -sm * (1.0 + 1e-12)) throw DomainError("entropy_l2_split: F = mu + sqrt(mu) f is negative at node " + std::to_string(i));
    const double af = std::abs(f);
    if (af <= sm) {
      out.a += 0.25 * f * f;
    } else {
      out.b += 0.25 * sm * af;
    }
  }
  out.a *= grid.cell_volume();
  out.b *= grid.cell_volume();
  return out;
}

EntropySplit entropy_l2_split(const DistributionField& perturbation) {
  if (perturbation.representation() != Representation::kPerturbation) {
    throw DomainError("entropy_l2_split: expected a perturbation field");
  }
  EntropySplit total;
  for (int ix = 0; ix < perturbation.slices(); ++ix) {
    const EntropySplit s = entropy_l2_split(perturbation.grid(), perturbation.slice(ix));
    total.a += s.a;
    total.b += s.b;
  }
  total.a /= perturbation.slices();
  total.b /= perturbation.slices();
  return total;
}

}  // namespace softbte
