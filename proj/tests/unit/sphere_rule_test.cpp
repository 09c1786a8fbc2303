#include <gtest/gtest.h>

#include <cmath>

#include "softbte/errors.hpp"
#include "softbte/sphere_rule.hpp"

using namespace softbte;

namespace {

// Mean of x^a y^b z^c over the unit sphere: zero unless all exponents are even, otherwise
// (a-1)!!(b-1)!!(c-1)!! / (n+1)!! with n = a+b+c.
double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

double sphere_mean(int a, int b, int c) {
  if (a % 2 || b % 2 || c % 2) return 0.0;
  return double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1) / double_factorial(a + b + c + 1);
}

}  // namespace

class LebedevExactness : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(LebedevExactness, IntegratesMonomialsUpToDegree) {
  const auto [points, degree] = GetParam();
  const SphereRule rule = lebedev_rule(points);
  ASSERT_EQ(rule.size(), static_cast<std::size_t>(points));
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  EXPECT_NEAR(wsum, 1.0, 1e-14);
  for (const auto& p : rule.points) EXPECT_NEAR(norm2(p), 1.0, 1e-14);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
          s += rule.weights[i] * std::pow(rule.points[i].x, a) * std::pow(rule.points[i].y, b) * std::pow(rule.points[i].z, c);
        EXPECT_NEAR(s, sphere_mean(a, b, c), 1e-13) << points << " pts, x^" << a << " y^" << b << " z^" << c;
      }
}

INSTANTIATE_TEST_SUITE_P(Rules, LebedevExactness,
                         ::testing::Values(std::pair{6, 3}, std::pair{14, 5}, std::pair{26, 7}, std::pair{38, 9},
                                           std::pair{50, 11}));

TEST(Lebedev, DegreeIsSharpFor26Points) {
  const SphereRule rule = lebedev_rule(26);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(rule.points[i].x, 8);
  EXPECT_GT(std::abs(s - sphere_mean(8, 0, 0)), 1e-6);
}

TEST(Lebedev, RejectsUnsupportedSizes) { EXPECT_THROW(lebedev_rule(7), ConfigError); }
