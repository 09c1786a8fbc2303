#include "softbte/weights.hpp"

#include <cmath>
#include <sstream>

#include "softbte/errors.hpp"

namespace softbte {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

void WeightParams::validate(const ModelParams& model) const {
  const double s = resolved_s0();
  if (!(q > 0.0 && q < 1.0)) throw ConfigError("weights.q = " + num(q) + " violates 0 < q < 1");
  if (!(q < s && s < 1.0)) throw ConfigError("weights.s0 = " + num(s) + " with q = " + num(q) + " violates q < s₀ < 1");
  if (!(vartheta >= 0.0)) throw ConfigError("weights.vartheta = " + num(vartheta) + " violates vartheta >= 0");
  if (!(vartheta < -2.0 / model.gamma)) {
    throw ConfigError("weights.vartheta = " + num(vartheta) + " with gamma = " + num(model.gamma) +
                      " violates ϑ < −2/γ (vartheta < " + num(-2.0 / model.gamma) + ")");
  }
  if (!(beta >= 3.5)) throw ConfigError("weights.beta = " + num(beta) + " violates beta >= 7/2");
}

double weight_of_speed2(double speed2, double t, const WeightParams& wp) {
  const double decay = std::pow(1.0 + t, -wp.vartheta);
  return std::pow(1.0 + speed2, wp.beta) * std::exp(0.125 * wp.q * (1.0 + decay) * speed2);
}

double weight(Vec3 v, double t, const WeightParams& wp) { return weight_of_speed2(norm2(v), t, wp); }

double nu_tilde(double speed2, double t, const WeightParams& wp, double nu_of_v) {
  return nu_of_v + wp.vartheta * wp.q * speed2 / (8.0 * std::pow(1.0 + t, wp.vartheta + 1.0));
}

double nu_tilde_time_exponent(double gamma, double vartheta) {
  if (!(gamma > -3.0 && gamma < 0.0)) throw ConfigError("gamma = " + num(gamma) + " violates -3 < gamma < 0");
  if (!(vartheta >= 0.0 && vartheta < -2.0 / gamma)) {
    throw ConfigError("vartheta = " + num(vartheta) + " violates ϑ < −2/γ (0 <= vartheta < " + num(-2.0 / gamma) + ")");
  }
  return (1.0 + vartheta) * gamma / (2.0 - gamma);
}

double decay_exponent(double gamma, double vartheta) { return 1.0 + nu_tilde_time_exponent(gamma, vartheta); }

double semigroup_exponent(double nu_of_v, double speed2, double s, double t, const WeightParams& wp) {
  if (s < 0.0) throw DomainError("semigroup_G: s must be >= 0");
  if (s > t) throw DomainError("semigroup_G: requires s <= t");
  double added = 0.0;
  if (wp.vartheta > 0.0) {
    // (1+s)^{-vartheta} - (1+t)^{-vartheta} without cancellation for nearby s, t
    const double a = -wp.vartheta * std::log1p(s);
    const double b = -wp.vartheta * std::log1p(t);
    added = 0.125 * wp.q * speed2 * std::exp(a) * -std::expm1(b - a);
  }
  return nu_of_v * (t - s) + added;
}

double semigroup_G(double nu_of_v, double speed2, double s, double t, const WeightParams& wp) {
  return std::exp(-semigroup_exponent(nu_of_v, speed2, s, t, wp));
}

double default_p(double gamma) {
  if (4.0 * gamma > -3.0) return 4.0;
  if (2.5 * gamma > -3.0) return 2.5;
  return 0.5 * (1.0 - 3.0 / gamma);
}

void validate_p(double p, double gamma) {
  if (!(p > 1.0)) throw ConfigError("p = " + num(p) + " violates p > 1");
  if (!(p * gamma > -3.0)) throw ConfigError("p = " + num(p) + " with gamma = " + num(gamma) + " violates p·γ > −3");
}

double dual_exponent(double p) { return 5.0 * p / (p - 1.0); }

}  // namespace softbte
