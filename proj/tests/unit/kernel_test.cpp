#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "softbte/errors.hpp"
#include "softbte/kernel.hpp"
#include "softbte/maxwellian.hpp"

using namespace softbte;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Cutoff, SmoothstepRamp) {
  const ModelParams p = make_model_params(-1.0, 0.1);
  EXPECT_EQ(cutoff_chi(0.0, p), 0.0);
  EXPECT_EQ(cutoff_chi(0.1, p), 0.0);
  EXPECT_DOUBLE_EQ(cutoff_chi(0.15, p), 0.5);
  EXPECT_EQ(cutoff_chi(0.2, p), 1.0);
  EXPECT_EQ(cutoff_chi(5.0, p), 1.0);
  double prev = 0.0;
  for (double r = 0.1; r <= 0.2; r += 0.005) {
    EXPECT_GE(cutoff_chi(r, p), prev);
    prev = cutoff_chi(r, p);
  }
}

TEST(KernelK1, ValueSymmetryAndSingularity) {
  const ModelParams p = make_model_params(-1.0);
  const Vec3 v{1.0, 0.5, -0.3}, u{-0.2, 0.1, 0.7};
  const double expected = 2.0 * kPi / norm(v - u) * std::sqrt(maxwellian(u) * maxwellian(v));
  EXPECT_NEAR(kernel_k1(v, u, p), expected, 1e-15);
  EXPECT_DOUBLE_EQ(kernel_k1(v, u, p), kernel_k1(u, v, p));
  EXPECT_THROW(kernel_k1(v, v, p), SingularPair);
}

TEST(OffsetKernel, SelfCellIsBallIntegral) {
  const VelocityGrid g(8.0, 16);
  const double h = g.spacing();
  const double rb = h * std::cbrt(3.0 / (4.0 * kPi));
  for (double gamma : {-0.5, -1.0, -2.5}) {
    const OffsetKernel k(g, gamma, [](double) { return 1.0; });
    const double exact = 4.0 * kPi * std::pow(rb, gamma + 3.0) / ((gamma + 3.0) * h * h * h);
    EXPECT_NEAR(k(0, 0, 0), exact, 1e-12 * exact) << gamma;
  }
}

TEST(OffsetKernel, SelfCellWithCutoffRamp) {
  const VelocityGrid g(8.0, 16);
  const double h = g.spacing();
  const double rb = h * std::cbrt(3.0 / (4.0 * kPi));
  const ModelParams p = make_model_params(-1.0, 0.2);
  const OffsetKernel k(g, p.gamma, [&](double r) { return cutoff_chi(r, p); }, {0.2, 0.4});
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto f = [&](double r) { return r * cutoff_chi(r, p); };
  const double radial = GK::integrate(f, 0.2, 0.4, 10, 1e-14) + GK::integrate(f, 0.4, rb, 10, 1e-14);
  const double exact = 4.0 * kPi * radial / (h * h * h);
  EXPECT_NEAR(k(0, 0, 0), exact, 1e-12 * exact);
}

TEST(OffsetKernel, FarOffsetsTakeCentreValues) {
  const VelocityGrid g(6.0, 12);
  const OffsetKernel k(g, -1.0, [](double) { return 1.0; });
  const double h = g.spacing();
  EXPECT_DOUBLE_EQ(k(1, 0, 0), 1.0 / h);
  EXPECT_DOUBLE_EQ(k(-2, 3, 1), std::pow(h * std::sqrt(14.0), -1.0));
  EXPECT_EQ(k.support_radius(), 11);
}

TEST(OffsetKernel, NearCellsAverageOverTheCube) {
  const VelocityGrid g(6.0, 12);
  const double h = g.spacing();
  const OffsetKernel k(g, -1.0, [](double) { return 1.0; }, {}, 1);
  // Midpoint oracle on a fine sub-lattice of the cell centred at (h, h, 0).
  const int m = 60;
  double sum = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const Vec3 x{h * (0.5 + (a + 0.5) / m), h * (0.5 + (b + 0.5) / m), h * (-0.5 + (c + 0.5) / m)};
        sum += 1.0 / norm(x);
      }
  EXPECT_NEAR(k(1, 1, 0), sum / (m * m * m), 1e-4 * k(1, 1, 0));
  EXPECT_DOUBLE_EQ(k(2, 0, 0), 1.0 / (2.0 * h));
}

TEST(KernelTable, CutoffPartsPartitionTheFullKernel) {
  const VelocityGrid g(8.0, 12);
  const KernelTable t(g, make_model_params(-1.0, 0.5));
  const auto& full = t.part(KernelPart::kFull).values();
  const auto& chi = t.part(KernelPart::kChi).values();
  const auto& rest = t.part(KernelPart::kOneMinusChi).values();
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_NEAR(chi[i] + rest[i], full[i], 1e-13 * full[i]);
  // (1 - chi) vanishes beyond 2 eps = 1.0 < spacing 1.333.
  EXPECT_EQ(t.part(KernelPart::kOneMinusChi).support_radius(), 0);
}

TEST(KernelTable, DiagonalK1UsesSelfCell) {
  const VelocityGrid g(8.0, 12);
  const ModelParams p = make_model_params(-1.0);
  const KernelTable t(g, p);
  const GridTables tab(g);
  const std::size_t i = g.index(5, 6, 7);
  EXPECT_NEAR(t.k1(i, i), 2.0 * kPi * t.part(KernelPart::kFull)(0, 0, 0) * tab.mu[i], 1e-15);
  const std::size_t j = g.index(2, 6, 7);
  EXPECT_NEAR(t.k1(i, j), kernel_k1(g.node(i), g.node(j), p), 1e-14);
  EXPECT_DOUBLE_EQ(t.chi(i, j), 1.0);
}

TEST(OffsetKernel, RejectsBadArguments) {
  const VelocityGrid g(6.0, 8);
  EXPECT_THROW(OffsetKernel(g, 0.5, [](double) { return 1.0; }), ConfigError);
  EXPECT_THROW(OffsetKernel(g, -1.0, [](double) { return 1.0; }, {}, -1), ConfigError);
}
