#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "softbte/entropy.hpp"
#include "softbte/errors.hpp"

using namespace softbte;

TEST(Entropy, DensityValues) {
  EXPECT_EQ(entropy_density(0.0), 1.0);
  EXPECT_EQ(entropy_density(1.0), 0.0);
  EXPECT_NEAR(entropy_density(2.0), 2.0 * std::log(2.0) - 1.0, 1e-15);
  // series near one: d^2/2 - d^3/6 + d^4/12
  const double a = 1.0 + 1e-5;
  const double d = a - 1.0;
  EXPECT_NEAR(entropy_density(a), d * d / 2.0 - d * d * d / 6.0 + d * d * d * d / 12.0, 1e-26);
  EXPECT_THROW(entropy_density(-1e-3), DomainError);
  EXPECT_THROW(entropy_density(std::nan("")), DomainError);
}

TEST(Entropy, RelativeEntropyOfScaledMaxwellian) {
  const VelocityGrid g(8.0, 16);
  const GridTables t(g);
  EXPECT_EQ(relative_entropy(g, t.mu), 0.0);
  std::vector<double> f(t.mu);
  for (double& x : f) x *= 2.0;
  const double mass = g.integrate(t.mu.data());
  EXPECT_NEAR(relative_entropy(g, f), (2.0 * std::log(2.0) - 1.0) * mass, 1e-14);
  std::vector<double> zero(g.size(), 0.0);
  EXPECT_NEAR(relative_entropy(g, zero), mass, 1e-14);
}

TEST(Entropy, BoltzmannHOfMaxwellian) {
  const VelocityGrid g(8.0, 24);
  const GridTables t(g);
  // int mu ln mu = -3/2 (1 + ln 2 pi)
  EXPECT_NEAR(boltzmann_H(g, t.mu), -1.5 * (1.0 + std::log(2.0 * std::numbers::pi)), 1e-8);
}

TEST(Entropy, SplitBranchesAtSqrtMu) {
  const VelocityGrid g(8.0, 8);
  const GridTables t(g);
  const std::size_t i = g.index(3, 4, 4);
  const double sm = t.sqrt_mu[i], h3 = g.cell_volume();
  std::vector<double> f(g.size(), 0.0);
  f[i] = sm;
  EntropySplit s = entropy_l2_split(g, f);
  EXPECT_DOUBLE_EQ(s.a, 0.25 * sm * sm * h3);
  EXPECT_EQ(s.b, 0.0);
  f[i] = 3.0 * sm;
  s = entropy_l2_split(g, f);
  EXPECT_EQ(s.a, 0.0);
  EXPECT_DOUBLE_EQ(s.b, 0.75 * sm * sm * h3);
  f[i] = -1.5 * sm;
  EXPECT_THROW(entropy_l2_split(g, f), DomainError);
}

TEST(Entropy, SplitIsDominatedByRelativeEntropy) {
  const VelocityGrid g(8.0, 12);
  const GridTables t(g);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> x(-1.0, 6.0);
  std::uniform_real_distribution<double> scale(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double s = scale(rng);
    std::vector<double> f(g.size()), F(g.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      // x = f / sqrt(mu) >= -1 keeps F >= 0
      const double r = std::max(-1.0, s * x(rng));
      f[i] = r * t.sqrt_mu[i];
      F[i] = t.mu[i] + t.sqrt_mu[i] * f[i];
    }
    const EntropySplit sp = entropy_l2_split(g, f);
    EXPECT_LE(sp.sum(), relative_entropy(g, F) * (1.0 + 1e-14)) << k;
  }
}

TEST(Entropy, FieldOverloadsAverageSlices) {
  const VelocityGrid g(8.0, 8);
  const GridTables t(g);
  DistributionField F(g, SpatialLayout::slab(2, 1.0), Representation::kAbsolute);
  std::copy(t.mu.begin(), t.mu.end(), F.slice(0).begin());
  for (std::size_t i = 0; i < t.mu.size(); ++i) F.slice(1)[i] = 2.0 * t.mu[i];
  EXPECT_NEAR(relative_entropy(F), 0.5 * relative_entropy(g, F.slice(1)), 1e-15);
  DistributionField pert(g, SpatialLayout::homogeneous(), Representation::kPerturbation);
  EXPECT_THROW(relative_entropy(pert), DomainError);
}
