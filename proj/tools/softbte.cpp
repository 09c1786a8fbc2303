#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#ifdef SOFTBTE_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "softbte/certify.hpp"
#include "softbte/errors.hpp"
#include "softbte/parallel.hpp"
#include "softbte/report.hpp"
#include "softbte/run_config.hpp"

namespace fs = std::filesystem;
using namespace softbte;

namespace {

enum Exit { kOk = 0, kConfigError = 1, kUnstable = 2, kCertificateFailure = 3 };

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
  bool no_timestamp = false;
};

RunConfig resolve(const Options& o) {
  RunConfig c = o.config.empty() ? RunConfig{} : load_run_config(o.config);
  if (!o.out.empty()) c.out_dir = o.out;
  if (o.seed) c.sim.seed = *o.seed;
  c.validate();
  return c;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_simulate(const Options& o) {
  const RunConfig c = resolve(o);
  const fs::path out = c.out_dir;
  const TimeSeriesRecord record = simulate(c.sim);
  std::optional<DecayFit> fit;
  if (!record.unstable) fit = try_decay_fit(record, c);

  write_text_file(out / "timeseries.csv", timeseries_csv(record));
  write_text_file(out / "summary.json", summary_json(c, record, fit));
  const std::string stamp = o.no_timestamp ? std::string() : utc_now();
  for (const auto& [name, plot] : simulation_plots(record, fit)) write_text_file(out / name, render_svg(plot, stamp));

  std::cout << "rows " << record.rows.size() << ", wrote " << out.string() << "\n";
  if (fit) std::cout << "decay fit: rho_est " << fit->rho_est << ", r2 " << fit->r2 << " (rho theory " << fit->rho_hint << ")\n";
  if (record.unstable) {
    std::cerr << "instability: " << record.note << "\n";
    return kUnstable;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const RunConfig c = resolve(o);
  const auto certs = run_suite(o.suite, c.sim, c.verify);
  write_text_file(fs::path(c.out_dir) / "verification.json", verify_json(c, o.suite, certs));
  bool ok = true;
  for (const auto& cert : certs) {
    std::cout << to_string(cert.verdict) << "  " << cert.lemma_id;
    for (const auto& [k, v] : cert.constants) std::cout << "  " << k << "=" << v;
    std::cout << "\n";
    ok = ok && cert.passed();
  }
  return ok ? kOk : kCertificateFailure;
}

int cmd_sweep(const Options& o) {
  const RunConfig c = resolve(o);
  const auto rows = run_sweep(c);
  write_text_file(fs::path(c.out_dir) / "sweep.csv", sweep_csv(rows));
  std::cout << rows.size() << " sweep rows, wrote " << (fs::path(c.out_dir) / "sweep.csv").string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softbte: soft-potential Boltzmann solver and bound verification"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Config file (key = value text or JSON)");
    sub->add_option("--out", o.out, "Output directory (overrides output.dir)");
    sub->add_option("--seed", o.seed, "Random seed (overrides run.seed)");
    sub->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp from SVG plots");
  };
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a simulation and write CSV, JSON and SVG output");
  auto* verify_cmd = app.add_subcommand("verify", "Run bound certificates and write verification.json");
  auto* sweep_cmd = app.add_subcommand("sweep", "Decay-exponent sweep over (gamma, vartheta)");
  for (auto* sub : {simulate_cmd, verify_cmd, sweep_cmd}) add_common(sub);
  verify_cmd->add_option("--suite", o.suite, "Certificate suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    apply_thread_limit_from_env();
    if (*simulate_cmd) return cmd_simulate(o);
    if (*verify_cmd) return cmd_verify(o);
    return cmd_sweep(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
