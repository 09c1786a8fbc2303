#pragma once

#include "softbte/model_params.hpp"
#include "softbte/vec3.hpp"

namespace softbte {

/// Parameters of the time-involved weight w_{q,vartheta,beta}(v, t).
struct WeightParams {
  double q = 0.5;
  double vartheta = 1.0;
  double beta = 3.5;
  /// Verification-only exponent with q < s0 < 1; a negative value means the default (1 + q)/2.
  double s0 = -1.0;

  double resolved_s0() const noexcept { return s0 < 0.0 ? 0.5 * (1.0 + q) : s0; }

  /// Throws ConfigError naming the violated condition (0 < q < s0 < 1, 0 <= vartheta < -2/gamma, beta >= 7/2).
  void validate(const ModelParams& model) const;
};

/// w(v, t) = (1+|v|^2)^beta exp{(q/8)(1 + (1+t)^{-vartheta}) |v|^2}.
double weight(Vec3 v, double t, const WeightParams& wp);
double weight_of_speed2(double speed2, double t, const WeightParams& wp);

/// nu~ = nu + vartheta q |v|^2 / (8 (1+t)^{vartheta+1}).
double nu_tilde(double speed2, double t, const WeightParams& wp, double nu_of_v);
inline double nu_tilde(Vec3 v, double t, const WeightParams& wp, double nu_of_v) {
  return nu_tilde(norm2(v), t, wp, nu_of_v);
}

/// rho = 1 + (1+vartheta) gamma / (2 - gamma), in (0, 1) on the admissible domain.
double decay_exponent(double gamma, double vartheta);

/// Exponent of the time lower bound of nu~: (1+vartheta) gamma / (2 - gamma) = rho - 1.
double nu_tilde_time_exponent(double gamma, double vartheta);

/// G_v(t, s) = exp(-int_s^t nu~(v, tau) dtau), closed form. Throws DomainError for s > t or s < 0.
double semigroup_G(double nu_of_v, double speed2, double s, double t, const WeightParams& wp);
inline double semigroup_G(double nu_of_v, Vec3 v, double s, double t, const WeightParams& wp) {
  return semigroup_G(nu_of_v, norm2(v), s, t, wp);
}
/// The exponent int_s^t nu~ dtau itself.
double semigroup_exponent(double nu_of_v, double speed2, double s, double t, const WeightParams& wp);

/// Lebesgue exponent for the Gamma bounds: p > 1 with p gamma > -3.
double default_p(double gamma);
void validate_p(double p, double gamma);
/// p' = 5p / (p - 1).
double dual_exponent(double p);

}  // namespace softbte
