#include "softbte/field.hpp"

#include <cmath>

#include "softbte/errors.hpp"

namespace softbte {

SpatialLayout SpatialLayout::slab(int nx, double period) {
  if (nx < 2) throw ConfigError("space.nx must be >= 2 for a slab layout");
  if (!(period > 0.0)) throw ConfigError("space.period must be positive");
  return {LayoutKind::kSlab, nx, period};
}

std::string to_string(Representation r) {
  switch (r) {
    case Representation::kAbsolute:
      return "F-absolute";
    case Representation::kPerturbation:
      return "f-perturbation";
    case Representation::kWeighted:
      return "h-weighted";
  }
  return "unknown";
}

DistributionField::DistributionField(const VelocityGrid& grid, SpatialLayout layout, Representation rep)
    : grid_(grid), layout_(layout), rep_(rep), values_(grid.size() * layout.slices(), 0.0) {}

DistributionField::DistributionField(const VelocityGrid& grid, SpatialLayout layout, Representation rep, std::vector<double> values)
    : grid_(grid), layout_(layout), rep_(rep), values_(std::move(values)) {
  if (values_.size() != grid_.size() * layout_.slices()) {
    throw GridMismatch("DistributionField: " + std::to_string(values_.size()) + " values for " +
                       std::to_string(grid_.size() * layout_.slices()) + " nodes");
  }
}

void DistributionField::check_admissible() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw DomainError("field has a non-finite value at node " + std::to_string(i));
    if (rep_ == Representation::kAbsolute && values_[i] < 0.0) {
      throw DomainError("absolute field is negative at node " + std::to_string(i));
    }
  }
}

void DistributionField::check_compatible(const DistributionField& other) const {
  if (!(grid_ == other.grid_) || layout_.kind != other.layout_.kind || layout_.slices() != other.layout_.slices()) {
    throw GridMismatch("fields live on different grids or layouts");
  }
}

namespace {

void expect(const DistributionField& f, Representation r, const char* what) {
  if (f.representation() != r) throw DomainError(std::string(what) + ": expected a " + to_string(r) + " field");
}

}  // namespace

DistributionField to_perturbation(const DistributionField& absolute) {
  expect(absolute, Representation::kAbsolute, "to_perturbation");
  const GridTables t(absolute.grid());
  DistributionField out(absolute.grid(), absolute.layout(), Representation::kPerturbation);
  for (int ix = 0; ix < absolute.slices(); ++ix) {
    auto src = absolute.slice(ix);
    auto dst = out.slice(ix);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = (src[i] - t.mu[i]) / t.sqrt_mu[i];
  }
  return out;
}

DistributionField to_absolute(const DistributionField& perturbation) {
  expect(perturbation, Representation::kPerturbation, "to_absolute");
  const GridTables t(perturbation.grid());
  DistributionField out(perturbation.grid(), perturbation.layout(), Representation::kAbsolute);
  for (int ix = 0; ix < perturbation.slices(); ++ix) {
    auto src = perturbation.slice(ix);
    auto dst = out.slice(ix);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = t.mu[i] + t.sqrt_mu[i] * src[i];
  }
  return out;
}

std::vector<double> weight_table(const VelocityGrid& grid, double t, const WeightParams& wp) {
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = weight_of_speed2(norm2(grid.node(i)), t, wp);
  return w;
}

DistributionField to_weighted(const DistributionField& perturbation, double t, const WeightParams& wp) {
  expect(perturbation, Representation::kPerturbation, "to_weighted");
  const auto w = weight_table(perturbation.grid(), t, wp);
  DistributionField out(perturbation.grid(), perturbation.layout(), Representation::kWeighted);
  for (int ix = 0; ix < perturbation.slices(); ++ix) {
    auto src = perturbation.slice(ix);
    auto dst = out.slice(ix);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = w[i] * src[i];
  }
  return out;
}

DistributionField from_weighted(const DistributionField& weighted, double t, const WeightParams& wp) {
  expect(weighted, Representation::kWeighted, "from_weighted");
  const auto w = weight_table(weighted.grid(), t, wp);
  DistributionField out(weighted.grid(), weighted.layout(), Representation::kPerturbation);
  for (int ix = 0; ix < weighted.slices(); ++ix) {
    auto src = weighted.slice(ix);
    auto dst = out.slice(ix);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] / w[i];
  }
  return out;
}

}  // namespace softbte
