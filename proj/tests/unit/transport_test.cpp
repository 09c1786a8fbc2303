#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "softbte/errors.hpp"
#include "softbte/transport.hpp"
#include "support.hpp"

using namespace softbte;
using testing_support::random_values;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Transport, ShiftsFourierModesExactly) {
  const VelocityGrid g(4.0, 8);
  const GridTables t(g);
  const SpatialLayout layout = SpatialLayout::slab(12, 3.0);
  DistributionField F(g, layout, Representation::kAbsolute);
  const double k = 2.0 * kPi * 3.0 / layout.period;
  for (int ix = 0; ix < layout.nx; ++ix)
    for (std::size_t iv = 0; iv < g.size(); ++iv) F.slice(ix)[iv] = t.mu[iv] * (1.0 + 0.5 * std::cos(k * layout.x(ix) + 0.3));
  const double dt = 0.37;
  SpectralTransport(g, layout).apply(F, dt);
  for (int ix = 0; ix < layout.nx; ++ix)
    for (std::size_t iv = 0; iv < g.size(); ++iv) {
      const double x = layout.x(ix) - t.nodes[iv].x * dt;
      EXPECT_NEAR(F.slice(ix)[iv], t.mu[iv] * (1.0 + 0.5 * std::cos(k * x + 0.3)), 1e-15);
    }
}

TEST(Transport, ConservesMassAlongEveryVelocity) {
  const VelocityGrid g(4.0, 8);
  const SpatialLayout layout = SpatialLayout::slab(10, 1.0);
  DistributionField F(g, layout, Representation::kAbsolute, random_values(g.size() * 10, 3, 0.0, 1.0));
  std::vector<double> before(g.size(), 0.0), after(g.size(), 0.0);
  for (int ix = 0; ix < 10; ++ix)
    for (std::size_t iv = 0; iv < g.size(); ++iv) before[iv] += F.slice(ix)[iv];
  transport_step(F, 0.21);
  for (int ix = 0; ix < 10; ++ix)
    for (std::size_t iv = 0; iv < g.size(); ++iv) after[iv] += F.slice(ix)[iv];
  for (std::size_t iv = 0; iv < g.size(); ++iv) EXPECT_NEAR(after[iv], before[iv], 1e-12 * before[iv]);
}

TEST(Transport, BackAndForthIsIdentityOnOddGrids) {
  // Without a Nyquist mode the shift is unitary and invertible.
  const VelocityGrid g(4.0, 8);
  const SpatialLayout layout = SpatialLayout::slab(9, 2.0);
  const auto v0 = random_values(g.size() * 9, 4);
  DistributionField F(g, layout, Representation::kAbsolute, v0);
  const SpectralTransport tr(g, layout);
  tr.apply(F, 0.4);
  tr.apply(F, -0.4);
  EXPECT_LE(testing_support::sup_diff(F.values(), v0), 1e-13);
}

TEST(Transport, HomogeneousFieldIsUntouched) {
  const VelocityGrid g(4.0, 8);
  const auto v0 = random_values(g.size(), 5);
  DistributionField F(g, SpatialLayout::homogeneous(), Representation::kAbsolute, v0);
  transport_step(F, 1.0);
  EXPECT_EQ(F.values(), v0);
}

TEST(Transport, RejectsMismatchedLayout) {
  const VelocityGrid g(4.0, 8);
  DistributionField F(g, SpatialLayout::slab(6, 1.0), Representation::kAbsolute);
  const SpectralTransport tr(g, SpatialLayout::slab(8, 1.0));
  EXPECT_THROW(tr.apply(F, 0.1), GridMismatch);
}
