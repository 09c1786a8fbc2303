#include "softbte/model_params.hpp"

#include "softbte/errors.hpp"

namespace softbte {

void ModelParams::validate() const {
  if (!(gamma > -3.0 && gamma < 0.0)) {
    throw ConfigError("model.gamma = " + std::to_string(gamma) + " violates -3 < gamma < 0 (soft potential)");
  }
  if (!(eps_cutoff > 0.0 && eps_cutoff < 1.0)) {
    throw ConfigError("model.eps_cutoff = " + std::to_string(eps_cutoff) + " violates 0 < eps < 1");
  }
}

ModelParams make_model_params(double gamma, double eps_cutoff) {
  ModelParams p;
  p.gamma = gamma;
  p.eps_cutoff = eps_cutoff;
  p.validate();
  return p;
}

std::string to_string(AngularModel) { return "abs-cos"; }
std::string to_string(CutoffShape) { return "cubic-smoothstep"; }

AngularModel parse_angular_model(const std::string& s) {
  if (s == "abs-cos") return AngularModel::kAbsCos;
  throw ConfigError("unknown angular model '" + s + "' (valid: abs-cos)");
}

CutoffShape parse_cutoff_shape(const std::string& s) {
  if (s == "cubic-smoothstep") return CutoffShape::kCubicSmoothstep;
  throw ConfigError("unknown cutoff shape '" + s + "' (valid: cubic-smoothstep)");
}

}  // namespace softbte
