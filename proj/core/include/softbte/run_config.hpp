#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "softbte/certify.hpp"
#include "softbte/simulate.hpp"

namespace softbte {

/// (gamma, vartheta) grid for the decay-exponent sweep; the cross product is run.
struct SweepSpec {
  std::vector<double> gammas;
  std::vector<double> varthetas;
};

/// Full configuration of one CLI invocation.
struct RunConfig {
  SimulationConfig sim;
  VerifySettings verify;
  SweepSpec sweep;
  /// Leading fraction of rows dropped by the decay fit of simulate and sweep.
  double fit_window = 0.2;
  std::string out_dir = "out";

  /// Throws ConfigError naming the violated condition.
  void validate() const;
  DecayFitOptions fit_options() const;
};

/// Parses flat "section.key = value" text ('#' starts a comment) or a JSON object whose nesting
/// mirrors the dotted keys. Errors carry `source:line` (text) or the field path (JSON).
RunConfig parse_run_config(std::string_view text, std::string_view source = "<config>");
RunConfig load_run_config(const std::filesystem::path& path);

enum class ValueKind { kNumber, kInteger, kBoolean, kText, kNumberList };

struct ConfigEntry {
  std::string key;
  ValueKind kind;
  std::string value;
};

/// The resolved config as flat entries in canonical order (numbers printed round-trip exact).
std::vector<ConfigEntry> flatten(const RunConfig& config);

}  // namespace softbte
