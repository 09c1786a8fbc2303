#include "softbte/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "softbte/errors.hpp"
#include "softbte/maxwellian.hpp"
#include "softbte/moments.hpp"

namespace softbte {

std::string to_string(InitialKind k) {
  switch (k) {
    case InitialKind::kEquilibrium:
      return "equilibrium";
    case InitialKind::kBump:
      return "bump";
    case InitialKind::kShiftedMaxwellian:
      return "shifted-maxwellian";
  }
  return "unknown";
}

InitialKind parse_initial_kind(const std::string& s) {
  if (s == "equilibrium") return InitialKind::kEquilibrium;
  if (s == "bump") return InitialKind::kBump;
  if (s == "shifted-maxwellian") return InitialKind::kShiftedMaxwellian;
  throw ConfigError("unknown initial.kind '" + s + "' (valid: equilibrium, bump, shifted-maxwellian)");
}

DistributionField make_initial_field(const VelocityGrid& grid, SpatialLayout layout, const InitialDataSpec& spec,
                                     std::uint64_t seed, InitialDataInfo* info) {
  const GridTables t(grid);
  DistributionField field(grid, layout, Representation::kAbsolute);
  const int nx = layout.slices();

  switch (spec.kind) {
    case InitialKind::kEquilibrium:
      for (int ix = 0; ix < nx; ++ix) std::copy(t.mu.begin(), t.mu.end(), field.slice(ix).begin());
      break;
    case InitialKind::kShiftedMaxwellian:
      if (!(spec.temperature > 0.0)) throw ConfigError("initial.temperature must be positive");
      for (int ix = 0; ix < nx; ++ix) {
        auto s = field.slice(ix);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = maxwellian_with_temperature(t.nodes[i], spec.temperature);
      }
      break;
    case InitialKind::kBump: {
      if (!(spec.amplitude >= 0.0)) throw ConfigError("initial.amplitude must be >= 0");
      Vec3 dir{1.0, 0.0, 0.0};
      double phase = 0.0;
      double phase_x = 0.0;
      if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal;
        std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
        do {
          dir = {normal(rng), normal(rng), normal(rng)};
        } while (norm(dir) < 1e-3);
        dir = (1.0 / norm(dir)) * dir;
        phase = uniform(rng);
        phase_x = uniform(rng);
      }
      for (int ix = 0; ix < nx; ++ix) {
        const double gx = layout.kind == LayoutKind::kSlab ? std::cos(2.0 * std::numbers::pi * layout.x(ix) / layout.period + phase_x) : 1.0;
        auto s = field.slice(ix);
        for (std::size_t i = 0; i < s.size(); ++i) {
          const double g = std::cos(spec.mode * dot(dir, t.nodes[i]) + phase) * gx;
          s[i] = t.mu[i] * (1.0 + spec.amplitude * g);
        }
      }
      break;
    }
  }

  if (spec.conserve && spec.kind == InitialKind::kBump) {
    // common correction from the torus-averaged perturbation
    std::vector<double> avg(grid.size(), 0.0);
    for (int ix = 0; ix < nx; ++ix) {
      auto s = field.slice(ix);
      for (std::size_t i = 0; i < s.size(); ++i) avg[i] += (s[i] - t.mu[i]) / nx;
    }
    const ConservationProjector projector(grid);
    const std::vector<double> c = projector.correction(avg);
    for (int ix = 0; ix < nx; ++ix) {
      auto s = field.slice(ix);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] -= c[i];
    }
  }

  double clipped = 0.0;
  double total = 0.0;
  for (double& v : field.values()) {
    total += std::abs(v);
    if (v < 0.0) {
      clipped += -v;
      v = 0.0;
    }
  }
  if (info != nullptr) info->clipped_fraction = total > 0.0 ? clipped / total : 0.0;
  return field;
}

}  // namespace softbte
