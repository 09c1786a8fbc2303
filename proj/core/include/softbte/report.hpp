#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softbte/certificate.hpp"
#include "softbte/decay_fit.hpp"
#include "softbte/run_config.hpp"
#include "softbte/simulate.hpp"

namespace softbte {

std::string version();

/// Time-series CSV with the fixed column set t,h_sup,f_l2,mass,mom_x,mom_y,mom_z,energy,H,rel_entropy,leakage.
std::string timeseries_csv(const TimeSeriesRecord& record);

/// Decay fit of sup|h| against the theoretical exponent, if the record supports one.
std::optional<DecayFit> try_decay_fit(const TimeSeriesRecord& record, const RunConfig& config, std::string* reason = nullptr);

/// summary.json of a simulate run: version, resolved config, run flags, final row and fit.
std::string summary_json(const RunConfig& config, const TimeSeriesRecord& record, const std::optional<DecayFit>& fit);

/// Verification report: version, resolved config, suite and one record per certificate.
std::string verify_json(const RunConfig& config, const std::string& suite, std::span<const Certificate> certificates);

struct SweepRow {
  double gamma = 0.0;
  double vartheta = 0.0;
  double rho_theory = 0.0;
  double rho_est = 0.0;
  double lambda = 0.0;
  double r2 = 0.0;
  std::string status;
  std::string reason;
};

/// Runs the (gamma, vartheta) cross product on the base config. Inadmissible pairs are
/// skipped with a reason instead of failing the sweep.
std::vector<SweepRow> run_sweep(const RunConfig& config);
std::string sweep_csv(std::span<const SweepRow> rows);

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

/// Static SVG line plot; `timestamp` is printed in a corner when non-empty.
std::string render_svg(const Plot& plot, const std::string& timestamp = {});

/// The three simulate plots keyed by file name: norms (log scale), entropy, decay-fit overlay.
std::vector<std::pair<std::string, Plot>> simulation_plots(const TimeSeriesRecord& record, const std::optional<DecayFit>& fit);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace softbte
