#include "softbte/collision_frequency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "softbte/errors.hpp"
#include "softbte/maxwellian.hpp"

namespace softbte {

namespace {

constexpr double kPi = std::numbers::pi;

// e^{-(a^2+r^2)/2} sinh(a r)/(a r), written without overflow or cancellation.
double radial_profile(double a, double r) {
  const double ar = a * r;
  const double gauss = std::exp(-0.5 * (r - a) * (r - a));
  if (ar < 1e-8) return std::exp(-0.5 * (a * a + r * r)) * (1.0 + ar * ar / 6.0);
  return gauss * (-std::expm1(-2.0 * ar)) / (2.0 * ar);
}

}  // namespace

double angular_constant(AngularModel) { return 2.0 * kPi; }

double collision_frequency_at_origin(double gamma) {
  return 8.0 * kPi * kPi * kMaxwellianNorm * std::pow(2.0, 0.5 * (gamma + 1.0)) * std::tgamma(0.5 * (gamma + 3.0));
}

double collision_frequency_of_speed(double speed, const ModelParams& params, double rel_tol) {
  params.validate();
  const double gamma = params.gamma;
  const double a = std::abs(speed);
  const double prefactor = angular_constant(params.angular_model) * kMaxwellianNorm * 4.0 * kPi;
  auto integrand = [&](double r) { return std::pow(r, gamma + 2.0) * radial_profile(a, r); };

  // The Gaussian factor is below 1e-30 of its peak outside [a - 12, a + 12].
  const double upper = a + 12.0;
  const double split = std::max(0.0, a - 12.0);

  double total = 0.0;
  double err_total = 0.0;
  double l1 = 0.0;

  // Piece containing the integrable r^{gamma+2} endpoint singularity.
  const double first_end = split > 0.0 ? std::min(1.0, split) : std::min(1.0, upper);
  {
    boost::math::quadrature::tanh_sinh<double> ts(12);
    double err = 0.0;
    double piece_l1 = 0.0;
    const double v = ts.integrate(integrand, 0.0, first_end, 0.1 * rel_tol, &err, &piece_l1);
    total += v;
    err_total += err;
    l1 += piece_l1;
  }
  // Smooth remainder, split where the Gaussian peak sits.
  std::vector<double> cuts{first_end};
  if (split > first_end) cuts.push_back(split);
  if (a > first_end && a < upper) cuts.push_back(a);
  cuts.push_back(upper);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    double err = 0.0;
    double piece_l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, cuts[i], cuts[i + 1], 15, 0.1 * rel_tol, &err, &piece_l1);
    total += v;
    err_total += err;
    l1 += piece_l1;
  }
  if (!(total > 0.0) || err_total > rel_tol * total + 1e-300) {
    throw QuadratureError("collision_frequency: radial quadrature did not converge at |v| = " + std::to_string(a),
                          total > 0.0 ? err_total / total : err_total);
  }
  return prefactor * total;
}

double collision_frequency(Vec3 v, const ModelParams& params, double rel_tol) {
  return collision_frequency_of_speed(norm(v), params, rel_tol);
}

}  // namespace softbte
