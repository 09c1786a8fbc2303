#pragma once

#include "softbte/model_params.hpp"
#include "softbte/vec3.hpp"

namespace softbte {

/// Collision frequency nu(v) = int int |v-u|^gamma q0(theta) mu(u) dw du.
///
/// With q0 = |cos theta| the angular integral is 2 pi and the remaining 3-D integral is
/// reduced exactly to a radial one about u = v:
///   nu(v) = 2 pi (2 pi)^{-3/2} 4 pi int_0^inf r^{gamma+2} e^{-(|v|^2+r^2)/2} sinh(|v| r)/(|v| r) dr,
/// which is evaluated by adaptive tanh-sinh quadrature. Throws QuadratureError when the
/// estimated error exceeds `rel_tol` times the integral.
double collision_frequency(Vec3 v, const ModelParams& params, double rel_tol = 1e-9);
double collision_frequency_of_speed(double speed, const ModelParams& params, double rel_tol = 1e-9);

/// Closed form at the origin: 8 pi^2 (2 pi)^{-3/2} 2^{(gamma+1)/2} Gamma((gamma+3)/2).
double collision_frequency_at_origin(double gamma);

/// Angular constant int_{S^2} q0 dw (2 pi for |cos theta|).
double angular_constant(AngularModel model);

}  // namespace softbte
