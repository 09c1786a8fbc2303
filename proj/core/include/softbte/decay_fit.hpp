#pragma once

#include <span>

namespace softbte {

struct DecayFitOptions {
  /// Fraction of leading rows discarded as transient.
  double drop_fraction = 0.2;
  double p_min = 0.01;
  double p_max = 3.0;
  std::size_t min_rows = 20;
};

/// Least-squares fit of ln y = a - lambda t^p over the tail window.
struct DecayFit {
  double a = 0.0;
  double lambda = 0.0;
  double rho_est = 0.0;
  double r2 = 0.0;
  /// Same fit with p fixed to the hint.
  double rho_hint = 0.0;
  double a_constrained = 0.0;
  double lambda_constrained = 0.0;
  double r2_constrained = 0.0;
  std::size_t rows_used = 0;
  double t_first = 0.0;
  double t_last = 0.0;
};

/// Throws FitDegenerate for fewer than min_rows rows, non-positive values in the window, or
/// data that does not decay over the window.
DecayFit decay_fit(std::span<const double> t, std::span<const double> y, double rho_hint, const DecayFitOptions& options = {});

}  // namespace softbte
