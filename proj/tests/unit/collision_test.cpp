#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "softbte/collision.hpp"
#include "softbte/collision_frequency.hpp"
#include "softbte/errors.hpp"
#include "support.hpp"

using namespace softbte;
using testing_support::random_values;
using testing_support::sup_abs;
using testing_support::sup_diff;

namespace {

const CollisionOperator& op12() {
  static const CollisionOperator op(VelocityGrid(8.0, 12), make_model_params(-1.0));
  return op;
}

// Smooth, decaying perturbation used as a generic test input.
std::vector<double> bump(const CollisionOperator& op, std::uint64_t seed) {
  const auto r = random_values(4, seed);
  const auto& t = op.tables();
  std::vector<double> f(t.mu.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec3 v = t.nodes[i];
    f[i] = t.sqrt_mu[i] * (1.0 + r[0] * v.x + r[1] * v.y * v.z + r[2] * std::cos(v.z + r[3]));
  }
  return f;
}

// Relative sup of L g = nu g - K2 g + K1 g.
double null_residual(const CollisionOperator& op, const std::vector<double>& g) {
  const auto k2 = op.apply_K2(g);
  const auto k1 = op.apply_K1(g);
  std::vector<double> res(g.size()), scale(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    res[i] = op.nu()[i] * g[i] - k2[i] + k1[i];
    scale[i] = op.nu()[i] * g[i];
  }
  return sup_abs(res) / sup_abs(scale);
}

}  // namespace

TEST(Collision, MaxwellianIsExactDiscreteEquilibrium) {
  const auto& op = op12();
  const auto& mu = op.tables().mu;
  const auto q = op.collide(mu, mu);
  const auto l = op.loss(mu, mu);
  EXPECT_LE(sup_abs(q), 1e-13 * sup_abs(l));
}

TEST(Collision, PlainInterpolationResidualShrinksWithResolution) {
  double prev = 1e300;
  for (int n : {12, 16}) {
    const CollisionOperator op(VelocityGrid(8.0, n), make_model_params(-1.0), {26, InterpolationMode::kPlain, BoundaryMode::kExtend});
    const auto& mu = op.tables().mu;
    const double r = sup_abs(op.collide(mu, mu)) / sup_abs(op.loss(mu, mu));
    EXPECT_LT(r, prev) << n;
    EXPECT_GT(r, 1e-6) << n;
    prev = r;
  }
}

TEST(Collision, Bilinear) {
  const auto& op = op12();
  const auto g1 = bump(op, 1), g2 = bump(op, 2), f = bump(op, 3);
  std::vector<double> mix(g1.size());
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = 0.7 * g1[i] - 1.3 * g2[i];
  const auto q = op.collide(mix, f);
  const auto q1 = op.collide(g1, f), q2 = op.collide(g2, f);
  std::vector<double> expect(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) expect[i] = 0.7 * q1[i] - 1.3 * q2[i];
  EXPECT_LE(sup_diff(q, expect), 1e-12 * sup_abs(expect));
}

TEST(Collision, LossAgainstMaxwellianIsNuTimesF) {
  const auto& op = op12();
  const auto f = bump(op, 4);
  const auto l = op.loss(op.tables().mu, f);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(l[i], op.nu()[i] * f[i], 1e-14 * std::abs(op.nu()[i]));
}

TEST(Collision, DiscreteFrequencyTracksContinuum) {
  const CollisionOperator op(VelocityGrid(8.0, 16), make_model_params(-1.0));
  const auto& g = op.grid();
  for (int i : {8, 10, 12}) {
    const std::size_t idx = g.index(i, 8, 8);
    const double exact = collision_frequency(g.node(idx), op.params());
    EXPECT_NEAR(op.nu()[idx], exact, 0.03 * exact) << i;
  }
}

TEST(Collision, GammaMatchesLiftedCollision) {
  const auto& op = op12();
  const auto& sm = op.tables().sqrt_mu;
  const auto g = random_values(sm.size(), 5), f = random_values(sm.size(), 6);
  std::vector<double> G(g.size()), F(f.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    G[i] = sm[i] * g[i];
    F[i] = sm[i] * f[i];
  }
  const auto q = op.collide(G, F);
  const auto gam = op.gamma_nl(g, f);
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_NEAR(gam[i] * sm[i], q[i], 1e-12 * sup_abs(q));
  const std::vector<double> zero(g.size(), 0.0);
  EXPECT_EQ(sup_abs(op.gamma_nl(zero, f)), 0.0);
}

TEST(Collision, CutoffSplitsSumToK) {
  const auto& op = op12();
  const auto f = bump(op, 7);
  const auto k = op.apply_K(f);
  const auto s = op.apply_K_splits(f);
  std::vector<double> sum(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) sum[i] = s.chi[i] + s.one_minus_chi[i];
  EXPECT_LE(sup_diff(sum, k), 1e-12 * sup_abs(k));
}

TEST(Collision, LinearisedOperatorMatchesGammaDefinition) {
  // L f = -Gamma(sqrt mu, f) - Gamma(f, sqrt mu) = nu f - K f.
  const auto& op = op12();
  const auto& sm = op.tables().sqrt_mu;
  const auto f = bump(op, 8);
  const auto a = op.gamma_nl(sm, f), b = op.gamma_nl(f, sm);
  const auto k = op.apply_K(f);
  std::vector<double> lhs(f.size()), rhs(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    lhs[i] = -a[i] - b[i];
    rhs[i] = op.nu()[i] * f[i] - k[i];
  }
  EXPECT_LE(sup_diff(lhs, rhs), 1e-12 * sup_abs(rhs));
}

TEST(Collision, CollisionInvariantsSpanTheDiscreteNullSpace) {
  const auto& op = op12();
  const auto& t = op.tables();
  std::vector<double> g(t.mu.size());
  EXPECT_LT(null_residual(op, t.sqrt_mu), 1e-12);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = t.nodes[i].x * t.sqrt_mu[i];
  EXPECT_LT(null_residual(op, g), 1e-7);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = t.nodes[i].x * t.nodes[i].y * t.sqrt_mu[i];
  EXPECT_GT(null_residual(op, g), 1e-2);
}

TEST(Collision, EnergyInvariantConvergesUnderRefinement) {
  // Trilinear interpolation of |v|^2 is biased by O(h^2), so |v|^2 sqrt(mu) is only approximately in the kernel.
  double prev = 1e300;
  for (int n : {12, 16}) {
    const CollisionOperator op(VelocityGrid(8.0, n), make_model_params(-1.0));
    const auto& t = op.tables();
    std::vector<double> g(t.mu.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = t.speed2[i] * t.sqrt_mu[i];
    const double r = null_residual(op, g);
    EXPECT_LT(r, 0.8 * prev) << n;
    prev = r;
  }
}

TEST(Collision, DropModeReportsLeakage) {
  const CollisionOperator op(VelocityGrid(6.0, 12), make_model_params(-1.0), {14, InterpolationMode::kMaxwellWeighted, BoundaryMode::kDrop});
  CollisionDiagnostics diag;
  const auto& mu = op.tables().mu;
  op.gain(mu, mu, &diag);
  EXPECT_GT(diag.leakage, 0.0);
  EXPECT_LT(diag.leakage, 1e-3);
}

TEST(Collision, EntropyProductionNeedsPositiveField) {
  const auto& op = op12();
  std::vector<double> f = op.tables().mu;
  EXPECT_NEAR(op.entropy_production(f), 0.0, 1e-12);
  f[5] = 0.0;
  EXPECT_THROW(op.entropy_production(f), DomainError);
}

TEST(Collision, RejectsWrongSizes) {
  const auto& op = op12();
  const std::vector<double> bad(7, 1.0);
  EXPECT_THROW(op.collide(bad, bad), GridMismatch);
  EXPECT_THROW(op.apply_K(bad), GridMismatch);
}
