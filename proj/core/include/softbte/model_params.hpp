#pragma once

#include <string>

namespace softbte {

/// Angular factor q0(theta) of the collision kernel B = |v-u|^gamma q0(theta).
enum class AngularModel { kAbsCos };

/// Shape of the cutoff ramp chi between eps and 2 eps.
enum class CutoffShape { kCubicSmoothstep };

/// Collision-kernel parameters shared by every kernel evaluation.
///
/// Soft potentials only: -3 < gamma < 0. The cutoff radius eps must lie in (0, 1).
struct ModelParams {
  double gamma = -1.0;
  AngularModel angular_model = AngularModel::kAbsCos;
  double eps_cutoff = 0.1;
  CutoffShape cutoff_shape = CutoffShape::kCubicSmoothstep;

  /// Throws ConfigError naming the violated condition.
  void validate() const;
};

/// Returns a validated copy.
ModelParams make_model_params(double gamma, double eps_cutoff = 0.1);

std::string to_string(AngularModel m);
std::string to_string(CutoffShape s);
AngularModel parse_angular_model(const std::string& s);
CutoffShape parse_cutoff_shape(const std::string& s);

}  // namespace softbte
