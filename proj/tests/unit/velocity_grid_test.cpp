#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "softbte/errors.hpp"
#include "softbte/maxwellian.hpp"
#include "softbte/velocity_grid.hpp"

using namespace softbte;

TEST(VelocityGrid, CellCentredNodes) {
  const VelocityGrid g(8.0, 16);
  EXPECT_DOUBLE_EQ(g.spacing(), 1.0);
  EXPECT_DOUBLE_EQ(g.coord(0), -7.5);
  EXPECT_DOUBLE_EQ(g.coord(15), 7.5);
  EXPECT_EQ(g.size(), 4096u);
}

TEST(VelocityGrid, IndexRoundTrip) {
  const VelocityGrid g(4.0, 9);
  for (std::size_t idx = 0; idx < g.size(); idx += 7) {
    const auto [i, j, k] = g.unflatten(idx);
    EXPECT_EQ(g.index(i, j, k), idx);
  }
  const auto [i, j, k] = g.unflatten(g.index(3, 5, 8));
  EXPECT_EQ(i, 3);
  EXPECT_EQ(j, 5);
  EXPECT_EQ(k, 8);
}

TEST(VelocityGrid, RejectsOutOfRangeSizes) {
  EXPECT_THROW(VelocityGrid(8.0, 4), ConfigError);
  EXPECT_THROW(VelocityGrid(8.0, 65), ConfigError);
  EXPECT_THROW(VelocityGrid(25.0, 16), ConfigError);
  EXPECT_THROW(VelocityGrid(0.0, 16), ConfigError);
}

TEST(VelocityGrid, MaxwellianNormalisation) {
  EXPECT_NEAR(kMaxwellianNorm, std::pow(2.0 * std::numbers::pi, -1.5), 1e-17);
}

// 1D oracle: the midpoint rule of exp(-x^2/2)/sqrt(2 pi) on the same nodes, cubed.
TEST(VelocityGrid, MaxwellianMassMatchesSeparableOracle) {
  for (int n : {16, 24, 32}) {
    const VelocityGrid g(8.0, n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::exp(-0.5 * g.coord(i) * g.coord(i)) * g.spacing();
    s /= std::sqrt(2.0 * std::numbers::pi);
    EXPECT_NEAR(g.maxwellian_mass_defect(), std::abs(1.0 - s * s * s), 1e-13) << n;
  }
  EXPECT_LT(VelocityGrid(8.0, 24).maxwellian_mass_defect(), 1e-9);
}

TEST(VelocityGrid, TablesMatchNodes) {
  const VelocityGrid g(6.0, 8);
  const GridTables t(g);
  for (std::size_t i = 0; i < g.size(); i += 13) {
    EXPECT_DOUBLE_EQ(t.mu[i], maxwellian(g.node(i)));
    EXPECT_NEAR(t.sqrt_mu[i] * t.sqrt_mu[i], t.mu[i], 1e-15 * t.mu[i]);
    EXPECT_DOUBLE_EQ(t.speed2[i], norm2(g.node(i)));
  }
}
