#include "softbte/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "softbte/errors.hpp"

namespace softbte {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

double Certificate::constant(const std::string& name) const {
  for (const auto& [k, v] : constants)
    if (k == name) return v;
  throw Error("certificate " + lemma_id + " has no constant '" + name + "'");
}

Certificate fit_holdout(std::string lemma_id, std::string claim, std::string constant_name,
                        std::span<const double> train, std::span<const double> holdout) {
  Certificate c;
  c.lemma_id = std::move(lemma_id);
  c.claim = std::move(claim);
  c.train_size = train.size();
  c.holdout_size = holdout.size();
  const bool finite = std::all_of(train.begin(), train.end(), [](double r) { return std::isfinite(r); }) &&
                      std::all_of(holdout.begin(), holdout.end(), [](double r) { return std::isfinite(r); });
  const double fitted = train.empty() ? 0.0 : *std::max_element(train.begin(), train.end());
  c.add_constant(constant_name, fitted);
  if (!finite || train.empty() || holdout.empty() || !(fitted > 0.0)) {
    c.verdict = Verdict::kDegenerate;
    c.add_note("reason", !finite ? "non-finite ratio" : "no signal (all training ratios vanish)");
    return c;
  }
  const double limit = kHoldoutSlack * fitted;
  std::size_t ok = 0;
  double worst = 0.0;
  for (double r : holdout) {
    if (r <= limit) ++ok;
    worst = std::max(worst, r / limit - 1.0);
  }
  c.pass_fraction = static_cast<double>(ok) / holdout.size();
  c.worst_violation = worst;
  c.verdict = ok == holdout.size() ? Verdict::kPass : Verdict::kFail;
  return c;
}

}  // namespace softbte
