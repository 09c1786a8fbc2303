#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "softbte/certificate.hpp"
#include "softbte/collision.hpp"
#include "softbte/decay_fit.hpp"
#include "softbte/model_params.hpp"
#include "softbte/simulate.hpp"
#include "softbte/weights.hpp"

namespace softbte {

/// Speed sweep for the nu band: `points` coarse speeds on [0, max_speed], refined by `refine`.
struct NuSweep {
  double max_speed = 12.0;
  int points = 25;
  int refine = 8;
};

Certificate certify_nu_bounds(const ModelParams& params, const NuSweep& sweep = {});

/// k1 against |v-u|^gamma exp(-|v|^2/4 - |u|^2/4) on uniform random pairs of the grid box.
Certificate certify_k1_bound(const ModelParams& params, double box_radius, std::size_t pairs, std::uint64_t seed);

struct BumpSample {
  std::size_t train_bumps = 10;
  std::size_t holdout_bumps = 10;
  double width = 0.75;
  double center_radius = 3.0;
  double max_speed = 5.0;
  double s2 = 0.95;
};

/// Operator-level k2^chi bound on truncated Gaussian bumps f >= 0, against the bump average of the
/// pointwise bound, at every node with |v| <= max_speed outside the bump. Returns the certified
/// bound first and the alternative shape (reported only) second.
std::vector<Certificate> certify_k2_bumps(const CollisionOperator& op, const BumpSample& sample, std::uint64_t seed);

/// Log-log slope of sup|w K^{1-chi} f| in eps on the test profile f (wf = 1 when empty).
Certificate certify_klowcut_scaling(const CollisionOperator& op, const WeightParams& wp, std::span<const double> eps_grid,
                                    std::span<const double> profile = {});

struct ProfileSample {
  std::size_t train = 4;
  std::size_t holdout = 4;
  double max_speed = 10.0;
};

/// w (K2^m + K1^m)|f| with m = chi e^{eps r^2} against <v>^{gamma-2}, ||wf|| = 1.
Certificate certify_kchi_weighted(const CollisionOperator& op, const WeightParams& wp, const ProfileSample& sample,
                                  std::uint64_t seed);

struct GammaSample {
  std::size_t train = 50;
  std::size_t holdout = 50;
  /// Lebesgue exponent; 0 selects default_p(gamma).
  double p = 0.0;
  /// Sup over nodes with |v| <= speed_fraction * R.
  double speed_fraction = 0.75;
};

/// Loss and gain bounds of Gamma, in that order.
std::vector<Certificate> certify_gamma_bounds(const CollisionOperator& op, const WeightParams& wp, const GammaSample& sample,
                                              std::uint64_t seed);
/// Ratios for explicit inputs (used by the certificate and its tests). Throws DomainError for f = 0.
double gamma_loss_ratio(const CollisionOperator& op, const WeightParams& wp, double p, std::span<const double> f,
                        double max_speed);
double gamma_gain_ratio(const CollisionOperator& op, const WeightParams& wp, double p, std::span<const double> f,
                        double max_speed);

struct EntropyCheck {
  double relative_tol = 1e-6;
  /// Absolute allowance for round-off in the entropy sums.
  double floor = 1e-13;
};

/// Monotone relative entropy and A + B <= E on every row of one or more runs.
Certificate certify_entropy(std::span<const TimeSeriesRecord> records, const EntropyCheck& check = {});
/// Copy of `record` whose relative entropy rises mid-run (negative control).
TimeSeriesRecord adversarial_entropy_record(const TimeSeriesRecord& record);

/// Fits sup|h| against exp(-lambda t^p); pass needs rho_est >= 0.8 rho, R^2 >= 0.95 for both the
/// free and the rho-constrained fit, and monotone decay over the fit window.
Certificate certify_decay(std::span<const double> t, std::span<const double> h_sup, const ModelParams& model,
                          const WeightParams& wp, const DecayFitOptions& options = {});
Certificate certify_decay(const TimeSeriesRecord& record, const ModelParams& model, const WeightParams& wp,
                          const DecayFitOptions& options = {});

/// Everything the suites need beyond the base simulation config.
struct VerifySettings {
  NuSweep nu;
  std::size_t k1_pairs = 10000;
  BumpSample k2;
  std::vector<double> eps_grid{0.4, 0.2, 0.1, 0.05};
  ProfileSample kchi;
  GammaSample gamma;
  int entropy_runs = 5;
  double entropy_amplitude = 0.5;
  double entropy_t_end = 2.0;
  EntropyCheck entropy;
  /// Replace the entropy records by the adversarial fixture.
  bool entropy_adversarial = false;
  int decay_n_per_dim = 12;
  double decay_dt = 0.1;
  double decay_t_end = 40.0;
  double decay_amplitude = 0.1;
  DecayFitOptions decay_fit;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("nu", "k1", "k2", "klowcut", "kchi", "gamma", "entropy", "decay" or "all").
/// Throws ConfigError for an unknown name.
std::vector<Certificate> run_suite(const std::string& suite, const SimulationConfig& base, const VerifySettings& settings);

}  // namespace softbte
