#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "softbte/errors.hpp"
#include "softbte/weights.hpp"

using namespace softbte;

namespace {

// Direct quadrature of int_s^t nu~(v, tau) dtau.
double exponent_oracle(double nu, double speed2, double s, double t, const WeightParams& wp) {
  auto f = [&](double tau) { return nu + wp.vartheta * wp.q * speed2 / (8.0 * std::pow(1.0 + tau, wp.vartheta + 1.0)); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  if (t == s) return 0.0;
  // geometric split keeps the (1+tau)^{-vartheta-1} profile well resolved on long intervals
  double total = 0.0;
  double a = s;
  while (a < t) {
    const double b = std::min(t, 2.0 * (1.0 + a) - 1.0);
    total += GK::integrate(f, a, b, 15, 1e-15);
    a = b;
  }
  return total;
}

std::string message_of(const WeightParams& wp, const ModelParams& m) {
  try {
    wp.validate(m);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Weights, WeightFormula) {
  const WeightParams wp{0.5, 1.0, 3.5};
  const Vec3 v{1.0, 2.0, -1.0};
  const double s2 = 6.0;
  const double expected = std::pow(7.0, 3.5) * std::exp(0.0625 * (1.0 + 1.0 / 3.0) * s2);
  EXPECT_NEAR(weight(v, 2.0, wp), expected, 1e-12 * expected);
  // at t = 0 the exponent is q |v|^2 / 4
  EXPECT_NEAR(weight_of_speed2(s2, 0.0, wp), std::pow(7.0, 3.5) * std::exp(0.125 * s2), 1e-9);
}

TEST(Weights, DecayExponentValues) {
  EXPECT_NEAR(decay_exponent(-1.0, 1.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(decay_exponent(-1.0, 0.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(decay_exponent(-2.0, 0.5), 0.25, 1e-15);
  EXPECT_NEAR(nu_tilde_time_exponent(-1.0, 1.0), -2.0 / 3.0, 1e-15);
  // rho stays in (0, 1) across the admissible domain
  for (double g = -2.9; g < 0.0; g += 0.1)
    for (double th = 0.0; th < -2.0 / g; th += 0.05) {
      const double rho = decay_exponent(g, th);
      EXPECT_GT(rho, 0.0);
      EXPECT_LT(rho, 1.0);
    }
  EXPECT_THROW(decay_exponent(-1.0, 2.0), ConfigError);
}

TEST(Weights, NuTilde) {
  const WeightParams wp{0.5, 1.0, 3.5};
  EXPECT_NEAR(nu_tilde(4.0, 1.0, wp, 2.0), 2.0 + 0.5 * 4.0 / (8.0 * 4.0), 1e-15);
  const WeightParams flat{0.5, 0.0, 3.5};
  EXPECT_EQ(nu_tilde(4.0, 1.0, flat, 2.0), 2.0);
}

TEST(Weights, SemigroupMatchesQuadrature) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    WeightParams wp;
    wp.q = 0.05 + 0.9 * u(rng);
    wp.vartheta = 1.9 * u(rng);
    const double nu = 0.05 + 2.0 * u(rng);
    const double s2 = 100.0 * u(rng);
    const double s = 40.0 * u(rng);
    const double t = s + 40.0 * u(rng);
    const double e = exponent_oracle(nu, s2, s, t, wp);
    const double g = semigroup_G(nu, s2, s, t, wp);
    // relative error of G is the absolute error of its exponent
    EXPECT_NEAR(std::log(g), -e, 1e-10) << k;
    EXPECT_NEAR(g, std::exp(-e), 1e-10 * std::exp(-e)) << k;
  }
}

TEST(Weights, SemigroupCocycle) {
  const WeightParams wp{0.4, 0.8, 3.5};
  for (double s2 : {0.0, 3.0, 50.0}) {
    const double s = 0.3, tau = 2.7, t = 11.0;
    const double lhs = semigroup_G(0.7, s2, s, t, wp);
    const double rhs = semigroup_G(0.7, s2, s, tau, wp) * semigroup_G(0.7, s2, tau, t, wp);
    const double e = semigroup_exponent(0.7, s2, s, t, wp);
    const double e_split = semigroup_exponent(0.7, s2, s, tau, wp) + semigroup_exponent(0.7, s2, tau, t, wp);
    constexpr double ulp = std::numeric_limits<double>::epsilon();
    EXPECT_NEAR(e, e_split, 4.0 * ulp * e);
    // exp amplifies the exponent's rounding by its magnitude
    EXPECT_NEAR(lhs, rhs, 8.0 * ulp * std::max(1.0, e) * lhs);
    EXPECT_EQ(semigroup_G(0.7, s2, t, t, wp), 1.0);
  }
}

TEST(Weights, SemigroupDomain) {
  const WeightParams wp;
  EXPECT_THROW(semigroup_G(1.0, 1.0, 2.0, 1.0, wp), DomainError);
  EXPECT_THROW(semigroup_G(1.0, 1.0, -1.0, 1.0, wp), DomainError);
}

TEST(Weights, LebesgueExponents) {
  EXPECT_NEAR(dual_exponent(2.5), 25.0 / 3.0, 1e-14);
  EXPECT_EQ(default_p(-0.5), 4.0);
  EXPECT_EQ(default_p(-1.0), 2.5);
  const double p = default_p(-2.5);
  EXPECT_GT(p, 1.0);
  EXPECT_GT(p * -2.5, -3.0);
  EXPECT_NO_THROW(validate_p(2.5, -1.0));
  EXPECT_THROW(validate_p(1.0, -1.0), ConfigError);
  try {
    validate_p(2.0, -2.0);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("p·γ > −3"), std::string::npos);
  }
}

TEST(Weights, ValidationNamesTheCondition) {
  const ModelParams m = make_model_params(-1.0);
  EXPECT_EQ(message_of(WeightParams{0.5, 1.0, 3.5}, m), "");
  EXPECT_NE(message_of(WeightParams{0.5, 3.0, 3.5}, m).find("ϑ < −2/γ"), std::string::npos);
  EXPECT_NE(message_of(WeightParams{0.5, 1.0, 3.5, 0.4}, m).find("q < s₀ < 1"), std::string::npos);
  EXPECT_NE(message_of(WeightParams{1.5, 1.0, 3.5}, m).find("0 < q < 1"), std::string::npos);
  EXPECT_NE(message_of(WeightParams{0.5, 1.0, 3.0}, m).find("beta >= 7/2"), std::string::npos);
  EXPECT_NE(message_of(WeightParams{0.5, -0.1, 3.5}, m).find("vartheta >= 0"), std::string::npos);
  EXPECT_DOUBLE_EQ(WeightParams{}.resolved_s0(), 0.75);
}
