#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace softbte {

enum class Verdict { kPass, kFail, kDegenerate };

std::string to_string(Verdict v);

/// Outcome of one numerical check of an inequality with an empirical constant.
struct Certificate {
  std::string lemma_id;
  std::string claim;
  /// Named fitted constants, in insertion order.
  std::vector<std::pair<std::string, double>> constants;
  std::size_t train_size = 0;
  std::size_t holdout_size = 0;
  double pass_fraction = 0.0;
  double worst_violation = 0.0;
  Verdict verdict = Verdict::kDegenerate;
  /// Named flags / informational values (e.g. over-decay).
  std::vector<std::pair<std::string, std::string>> notes;

  bool passed() const noexcept { return verdict == Verdict::kPass; }
  double constant(const std::string& name) const;
  void add_constant(std::string name, double value) { constants.emplace_back(std::move(name), value); }
  void add_note(std::string name, std::string value) { notes.emplace_back(std::move(name), std::move(value)); }
};

/// Slack applied to fitted constants on the hold-out set.
inline constexpr double kHoldoutSlack = 1.05;

/// Fits C = max(train) and checks every hold-out ratio against kHoldoutSlack * C.
/// Non-finite or all-zero training ratios give a degenerate verdict.
Certificate fit_holdout(std::string lemma_id, std::string claim, std::string constant_name,
                        std::span<const double> train, std::span<const double> holdout);

}  // namespace softbte
