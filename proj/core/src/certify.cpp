#include "softbte/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "softbte/collision_frequency.hpp"
#include "softbte/errors.hpp"
#include "softbte/kernel.hpp"
#include "softbte/maxwellian.hpp"

namespace softbte {
namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// g(v) = sum_j a_j cos(k_j . v + phi_j) / sum_j |a_j|, so |g| <= 1.
class TrigProfile {
 public:
  TrigProfile(std::mt19937_64& rng, double max_wavenumber) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (auto& t : terms_) {
      t.a = unit(rng);
      t.k = max_wavenumber * Vec3{unit(rng), unit(rng), unit(rng)};
      t.phi = phase(rng);
      norm_ += std::abs(t.a);
    }
  }
  double operator()(Vec3 v) const {
    double s = 0.0;
    for (const auto& t : terms_) s += t.a * std::cos(dot(t.k, v) + t.phi);
    return s / norm_;
  }

 private:
  struct Term {
    double a;
    Vec3 k;
    double phi;
  };
  std::array<Term, 3> terms_{};
  double norm_ = 0.0;
};

std::vector<double> weight_values(const GridTables& tab, const WeightParams& wp) {
  std::vector<double> w(tab.speed2.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = weight_of_speed2(tab.speed2[i], 0.0, wp);
  return w;
}

double sup_abs(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

bool all_zero(std::span<const double> a) {
  return std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; });
}

// Slope of the least-squares line through (x, y).
double ls_slope(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

Certificate degenerate(std::string id, std::string claim, std::string reason) {
  Certificate c;
  c.lemma_id = std::move(id);
  c.claim = std::move(claim);
  c.verdict = Verdict::kDegenerate;
  c.add_note("reason", std::move(reason));
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------------------------

Certificate certify_nu_bounds(const ModelParams& params, const NuSweep& sweep) {
  params.validate();
  const std::string id = "nu_est";
  const std::string claim = "c1 (1+|v|^2)^{gamma/2} <= nu(v) <= c2 (1+|v|^2)^{gamma/2}";
  if (sweep.points < 3 || sweep.refine < 1 || !(sweep.max_speed > 0.0))
    return degenerate(id, claim, "sweep needs at least 3 speeds on a positive range");

  auto ratio = [&](double s) {
    return collision_frequency_of_speed(s, params) / std::pow(1.0 + s * s, 0.5 * params.gamma);
  };
  auto sweep_band = [&](int points) {
    std::vector<double> r(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) r[static_cast<std::size_t>(i)] = ratio(sweep.max_speed * i / (points - 1));
    return r;
  };
  const auto coarse = sweep_band(sweep.points);
  const auto fine = sweep_band((sweep.points - 1) * sweep.refine + 1);
  const auto [c1, c2] = std::minmax_element(coarse.begin(), coarse.end());

  Certificate c;
  c.lemma_id = id;
  c.claim = claim;
  c.train_size = coarse.size();
  c.holdout_size = fine.size();
  c.add_constant("c1", *c1);
  c.add_constant("c2", *c2);
  const auto [f1, f2] = std::minmax_element(fine.begin(), fine.end());
  c.add_constant("c1_refined", *f1);
  c.add_constant("c2_refined", *f2);
  if (!std::isfinite(*c1) || !std::isfinite(*c2) || !(*c1 > 0.0)) {
    c.verdict = Verdict::kFail;
    c.add_note("reason", "band not finite and positive");
    return c;
  }
  const double lo = 0.9 * *c1, hi = 1.1 * *c2;
  std::size_t ok = 0;
  double worst = 0.0;
  for (double r : fine) {
    if (r >= lo && r <= hi) ++ok;
    worst = std::max({worst, lo / r - 1.0, r / hi - 1.0});
  }
  c.pass_fraction = static_cast<double>(ok) / fine.size();
  c.worst_violation = worst;
  c.verdict = ok == fine.size() ? Verdict::kPass : Verdict::kFail;
  return c;
}

// ---------------------------------------------------------------------------------------------

Certificate certify_k1_bound(const ModelParams& params, double box_radius, std::size_t pairs, std::uint64_t seed) {
  params.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box_radius, box_radius);
  auto draw = [&](std::size_t n) {
    std::vector<double> r;
    r.reserve(n);
    while (r.size() < n) {
      const Vec3 v{coord(rng), coord(rng), coord(rng)};
      const Vec3 u{coord(rng), coord(rng), coord(rng)};
      const double d2 = norm2(v - u);
      if (d2 == 0.0) continue;
      const double bound = std::pow(d2, 0.5 * params.gamma) * std::exp(-0.25 * (norm2(v) + norm2(u)));
      // Both sides underflow together far out; skip pairs where the bound is not representable.
      if (!(bound > 1e-280)) continue;
      r.push_back(kernel_k1(v, u, params) / bound);
    }
    return r;
  };
  const auto train = draw(pairs);
  const auto holdout = draw(pairs);
  return fit_holdout("k1_bound", "0 <= k1(v,u) <= C |v-u|^gamma e^{-|v|^2/4} e^{-|u|^2/4}", "C", train, holdout);
}

// ---------------------------------------------------------------------------------------------

std::vector<Certificate> certify_k2_bumps(const CollisionOperator& op, const BumpSample& sample, std::uint64_t seed) {
  const auto& grid = op.grid();
  const auto& tab = op.tables();
  const ModelParams& mp = op.params();
  const double eps = mp.eps_cutoff;
  const double s2 = sample.s2, s1 = 0.9 * sample.s2;

  auto bound0 = [&](Vec3 v, Vec3 u) {
    const double d2 = norm2(v - u);
    const double e = norm2(v) - norm2(u);
    return std::pow(eps, mp.gamma - 1.0) * std::exp(-0.125 * d2 - 0.125 * e * e / d2) / std::sqrt(d2);
  };
  auto bound1 = [&](Vec3 v, Vec3 u) {
    const double d2 = norm2(v - u);
    const double e = norm2(v) - norm2(u);
    return std::exp(-0.125 * s2 * d2 - 0.125 * s1 * e * e / d2) /
           (std::sqrt(d2) * std::pow(1.0 + norm(v) + norm(u), 1.0 - mp.gamma));
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (tab.speed2[i] <= sample.max_speed * sample.max_speed) inner.push_back(i);
  if (inner.empty()) throw ConfigError("bump sample: no grid nodes within max_speed");

  // Bumps are cut off at two widths so that sampled v never meets the 1/|v-u| singularity.
  const double support = 2.0 * sample.width;
  std::vector<double> r0[2], r1[2];
  for (std::size_t b = 0; b < sample.train_bumps + sample.holdout_bumps; ++b) {
    const int set = b < sample.train_bumps ? 0 : 1;
    Vec3 u0;
    do {
      u0 = sample.center_radius * Vec3{unit(rng), unit(rng), unit(rng)};
    } while (norm2(u0) > sample.center_radius * sample.center_radius);
    std::vector<double> f(grid.size(), 0.0);
    std::vector<std::size_t> bump_nodes;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double d2 = norm2(tab.nodes[i] - u0);
      if (d2 > support * support) continue;
      f[i] = std::exp(-d2 / (2.0 * sample.width * sample.width));
      bump_nodes.push_back(i);
    }
    const double h3 = grid.cell_volume();
    const auto k2f = op.apply_K2(f, KernelPart::kChi);
    for (std::size_t iv : inner) {
      const Vec3 v = tab.nodes[iv];
      if (norm(v - u0) < support + grid.spacing()) continue;
      // int bound(v, u) f(u) du, the bump average of the pointwise bound.
      double b0 = 0.0, b1 = 0.0;
      for (std::size_t iu : bump_nodes) {
        b0 += bound0(v, tab.nodes[iu]) * f[iu] * h3;
        b1 += bound1(v, tab.nodes[iu]) * f[iu] * h3;
      }
      r0[set].push_back(std::abs(k2f[iv]) / b0);
      r1[set].push_back(std::abs(k2f[iv]) / b1);
    }
  }
  auto c0 = fit_holdout("k2_esti.0", "|K2^chi f(v)| <= C eps^{gamma-1} int exp(-|v-u|^2/8 - (|v|^2-|u|^2)^2/(8|v-u|^2)) / |v-u| f(u) du",
                        "C", r0[0], r0[1]);
  auto c1 = fit_holdout("k2_esti.1", "|K2^chi f(v)| <= C_eps int exp(-s2|v-u|^2/8 - s1(|v|^2-|u|^2)^2/(8|v-u|^2)) / (|v-u| (1+|v|+|u|)^{1-gamma}) f(u) du",
                        "C_eps", r1[0], r1[1]);
  c0.add_note("bump_width", fmt(sample.width));
  c1.add_note("s1", fmt(s1));
  c1.add_note("s2", fmt(s2));
  c1.add_note("role", "informational");
  return {c0, c1};
}

// ---------------------------------------------------------------------------------------------

Certificate certify_klowcut_scaling(const CollisionOperator& op, const WeightParams& wp, std::span<const double> eps_grid,
                                    std::span<const double> profile) {
  const auto& grid = op.grid();
  const auto& tab = op.tables();
  const ModelParams& base = op.params();
  wp.validate(base);
  const std::string id = "k_esti.2";
  const std::string claim = "w K^{1-chi} f <= C mu^{(1-q)/8} eps^{gamma+3} ||w f||_inf";
  const auto w = weight_values(tab, wp);

  std::vector<double> f;
  if (profile.empty()) {
    f.resize(grid.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1.0 / w[i];
  } else {
    if (profile.size() != grid.size()) throw GridMismatch("klowcut profile size does not match the grid");
    f.assign(profile.begin(), profile.end());
  }
  if (eps_grid.size() < 2) throw ConfigError("klowcut scaling needs at least two eps values");
  std::vector<double> wf(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) wf[i] = w[i] * f[i];
  const double wf_sup = sup_abs(wf);
  if (wf_sup == 0.0) return degenerate(id, claim, "test profile vanishes");

  std::vector<double> log_eps, log_sup;
  double tail_worst = 0.0;
  const double tail_exp = (1.0 - wp.q) / 16.0;
  for (double eps : eps_grid) {
    ModelParams mp = base;
    mp.eps_cutoff = eps;
    mp.validate();
    const OffsetKernel kernel(grid, mp.gamma, [&](double r) { return 1.0 - cutoff_chi(r, mp); }, {eps, 2.0 * eps}, 1);
    const auto k2 = op.apply_K2_with(f, kernel);
    const auto k1 = op.apply_K1_with(f, kernel);
    double sup_all = 0.0, sup_core = 0.0, sup_tail = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double val = std::abs(w[i] * (k2[i] - k1[i])) / wf_sup;
      sup_all = std::max(sup_all, val);
      const double scaled = val / std::pow(tab.mu[i], tail_exp);
      double& slot = tab.speed2[i] >= 36.0 ? sup_tail : sup_core;
      slot = std::max(slot, scaled);
    }
    if (!(sup_all > 0.0)) return degenerate(id, claim, "K^{1-chi} f vanishes at eps = " + fmt(eps));
    log_eps.push_back(std::log(eps));
    log_sup.push_back(std::log(sup_all));
    if (sup_core > 0.0) tail_worst = std::max(tail_worst, sup_tail / sup_core);
  }
  const double slope = ls_slope(log_eps, log_sup);
  const double target = base.gamma + 3.0;

  Certificate c;
  c.lemma_id = id;
  c.claim = claim;
  c.train_size = eps_grid.size();
  c.holdout_size = eps_grid.size();
  c.add_constant("slope", slope);
  c.add_constant("slope_target", target);
  c.add_constant("tail_ratio", tail_worst);
  c.add_constant("C", std::exp(log_sup.back()) / std::pow(eps_grid.back(), target));
  const bool slope_ok = slope >= 0.85 * target && slope <= 1.15 * target;
  // Beyond |v| = 6 the profile, divided by mu^{(1-q)/16}, must not exceed its inner maximum.
  const bool tail_ok = tail_worst <= 1.0;
  c.pass_fraction = (static_cast<double>(slope_ok) + static_cast<double>(tail_ok)) / 2.0;
  c.worst_violation = std::max({0.0, std::abs(slope / target - 1.0) - 0.15, tail_worst - 1.0});
  c.verdict = slope_ok && tail_ok ? Verdict::kPass : Verdict::kFail;
  return c;
}

// ---------------------------------------------------------------------------------------------

Certificate certify_kchi_weighted(const CollisionOperator& op, const WeightParams& wp, const ProfileSample& sample,
                                  std::uint64_t seed) {
  const auto& grid = op.grid();
  const auto& tab = op.tables();
  const ModelParams& mp = op.params();
  wp.validate(mp);
  const double eps = mp.eps_cutoff;
  const auto w = weight_values(tab, wp);
  const OffsetKernel kernel(grid, mp.gamma, [&](double r) { return cutoff_chi(r, mp) * std::exp(eps * r * r); },
                            {eps, 2.0 * eps});

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.0, 0.5);
  std::vector<double> ratios[2];
  for (std::size_t s = 0; s < sample.train + sample.holdout; ++s) {
    const int set = s < sample.train ? 0 : 1;
    // The first profile is wf = 1 exactly.
    const double b = s == 0 ? 0.0 : amp(rng);
    const TrigProfile g(rng, 0.8);
    std::vector<double> f(grid.size());
    double wf_sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = (1.0 + b * g(tab.nodes[i])) / w[i];
      wf_sup = std::max(wf_sup, w[i] * f[i]);
    }
    for (double& x : f) x /= wf_sup;
    const auto k2 = op.apply_K2_with(f, kernel);
    const auto k1 = op.apply_K1_with(f, kernel);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (tab.speed2[i] > sample.max_speed * sample.max_speed) continue;
      const double lhs = w[i] * (k2[i] + k1[i]);
      ratios[set].push_back(lhs / std::pow(1.0 + tab.speed2[i], 0.5 * (mp.gamma - 2.0)));
    }
  }
  auto c = fit_holdout("k_esti.0", "w int k^chi e^{eps|v-u|^2} |f| du <= C <v>^{gamma-2} ||w f||_inf", "C", ratios[0],
                       ratios[1]);
  c.add_note("left_side", "w (K2 + K1) with the inflated multiplier (upper bound of |k^chi|)");
  return c;
}

// ---------------------------------------------------------------------------------------------

namespace {

std::vector<double> gamma_sample_profile(const GridTables& tab, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.0, 0.9);
  const double b = amp(rng);
  const TrigProfile g(rng, 1.0);
  std::vector<double> f(tab.mu.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = tab.sqrt_mu[i] * (1.0 + b * g(tab.nodes[i]));
  return f;
}

double lp_norm(const VelocityGrid& grid, std::span<const double> f, std::span<const double> density, double p) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = density[i] * std::pow(std::abs(f[i]), p);
  return std::pow(grid.integrate(v.data()), 1.0 / p);
}

double gamma_ratio(const CollisionOperator& op, const WeightParams& wp, double p, std::span<const double> f,
                   double max_speed, bool gain) {
  validate_p(p, op.params().gamma);
  if (all_zero(f)) throw DomainError("Gamma bound ratio undefined for f = 0");
  const auto& tab = op.tables();
  const auto w = weight_values(tab, wp);
  std::vector<double> wf(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) wf[i] = w[i] * f[i];
  const double pd = dual_exponent(p);
  double rhs;
  if (gain) {
    std::vector<double> density(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      density[i] = std::pow(1.0 + std::sqrt(tab.speed2[i]), -2.0 * wp.beta * pd + 16.0);
    rhs = sup_abs(wf) * lp_norm(op.grid(), wf, density, pd);
  } else {
    const std::vector<double> ones(f.size(), 1.0);
    rhs = sup_abs(wf) * lp_norm(op.grid(), f, ones, pd);
  }
  const auto g = gain ? op.gamma_plus(f, f) : op.gamma_minus(f, f);
  double lhs = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (tab.speed2[i] <= max_speed * max_speed) lhs = std::max(lhs, std::abs(w[i] * g[i]) / op.nu()[i]);
  return lhs / rhs;
}

}  // namespace

double gamma_loss_ratio(const CollisionOperator& op, const WeightParams& wp, double p, std::span<const double> f,
                        double max_speed) {
  return gamma_ratio(op, wp, p, f, max_speed, false);
}

double gamma_gain_ratio(const CollisionOperator& op, const WeightParams& wp, double p, std::span<const double> f,
                        double max_speed) {
  return gamma_ratio(op, wp, p, f, max_speed, true);
}

std::vector<Certificate> certify_gamma_bounds(const CollisionOperator& op, const WeightParams& wp, const GammaSample& sample,
                                              std::uint64_t seed) {
  const ModelParams& mp = op.params();
  wp.validate(mp);
  const double p = sample.p > 0.0 ? sample.p : default_p(mp.gamma);
  validate_p(p, mp.gamma);
  const double max_speed = sample.speed_fraction * op.grid().radius();
  std::mt19937_64 rng(seed);
  std::vector<double> loss[2], gain[2];
  for (std::size_t s = 0; s < sample.train + sample.holdout; ++s) {
    const int set = s < sample.train ? 0 : 1;
    const auto f = gamma_sample_profile(op.tables(), rng);
    loss[set].push_back(gamma_loss_ratio(op, wp, p, f, max_speed));
    gain[set].push_back(gamma_gain_ratio(op, wp, p, f, max_speed));
  }
  auto cl = fit_holdout("gamma_loss", "|w Gamma_-(f,f)| <= C nu ||w f||_inf ||f||_{p'}", "C_gamma", loss[0], loss[1]);
  auto cg = fit_holdout("gamma_gain",
                        "|w Gamma_+(f,f)| <= C nu ||w f||_inf (int (1+|u|)^{-2 beta p'+16} |w f|^{p'})^{1/p'}", "C_gamma",
                        gain[0], gain[1]);
  for (auto* c : {&cl, &cg}) {
    c->add_constant("p", p);
    c->add_constant("p_dual", dual_exponent(p));
  }
  return {cl, cg};
}

// ---------------------------------------------------------------------------------------------

Certificate certify_entropy(std::span<const TimeSeriesRecord> records, const EntropyCheck& check) {
  Certificate c;
  c.lemma_id = "entropy";
  c.claim = "E(F(t)) non-increasing within tol_H per step, and A + B <= E(F) at every row";
  std::size_t steps = 0, good = 0, split_bad = 0;
  double worst = 0.0, max_increase = 0.0, tol_max = 0.0;
  for (const auto& rec : records) {
    if (rec.rows.empty()) continue;
    const double tol = check.relative_tol * rec.rows.front().rel_entropy + check.floor;
    tol_max = std::max(tol_max, tol);
    for (std::size_t k = 0; k < rec.rows.size(); ++k) {
      const auto& row = rec.rows[k];
      bool ok = row.split.sum() <= row.rel_entropy;
      if (!ok) {
        ++split_bad;
        worst = std::max(worst, (row.split.sum() - row.rel_entropy) / std::max(row.rel_entropy, check.floor));
      }
      if (k > 0) {
        const double inc = row.rel_entropy - rec.rows[k - 1].rel_entropy;
        max_increase = std::max(max_increase, inc);
        if (inc > tol) {
          ok = false;
          worst = std::max(worst, inc / tol - 1.0);
        }
      }
      ++steps;
      if (ok) ++good;
    }
  }
  c.train_size = 0;
  c.holdout_size = steps;
  c.add_constant("tol_H", tol_max);
  c.add_constant("max_increase", max_increase);
  c.add_constant("split_violations", static_cast<double>(split_bad));
  if (steps == 0) {
    c.verdict = Verdict::kDegenerate;
    c.add_note("reason", "no recorded rows");
    return c;
  }
  c.pass_fraction = static_cast<double>(good) / steps;
  c.worst_violation = worst;
  c.verdict = good == steps ? Verdict::kPass : Verdict::kFail;
  return c;
}

TimeSeriesRecord adversarial_entropy_record(const TimeSeriesRecord& record) {
  if (record.rows.size() < 3) throw ConfigError("adversarial fixture needs at least 3 rows");
  TimeSeriesRecord out = record;
  auto& rows = out.rows;
  const std::size_t k = rows.size() / 2;
  const double e0 = rows.front().rel_entropy;
  rows[k].rel_entropy = rows[k - 1].rel_entropy + 1e-3 * e0 + 1e-9;
  out.note = "adversarial: entropy raised at row " + std::to_string(k);
  return out;
}

// ---------------------------------------------------------------------------------------------

Certificate certify_decay(std::span<const double> t, std::span<const double> h_sup, const ModelParams& model,
                          const WeightParams& wp, const DecayFitOptions& options) {
  wp.validate(model);
  const double rho = decay_exponent(model.gamma, wp.vartheta);
  Certificate c;
  c.lemma_id = "decay_rate";
  c.claim = "sup|h(t)| <= C exp(-lambda t^rho)";
  c.add_constant("rho_theory", rho);
  DecayFit fit;
  try {
    fit = decay_fit(t, h_sup, rho, options);
  } catch (const FitDegenerate& e) {
    c.verdict = Verdict::kFail;
    c.add_note("reason", e.what());
    return c;
  }
  c.train_size = fit.rows_used;
  c.holdout_size = fit.rows_used;
  c.add_constant("rho_est", fit.rho_est);
  c.add_constant("lambda", fit.lambda);
  c.add_constant("r2", fit.r2);
  c.add_constant("lambda_constrained", fit.lambda_constrained);
  c.add_constant("r2_constrained", fit.r2_constrained);

  const std::size_t first = t.size() - fit.rows_used;
  std::size_t increases = 0;
  for (std::size_t i = first + 1; i < t.size(); ++i)
    if (h_sup[i] > h_sup[i - 1]) ++increases;
  c.add_constant("window_increases", static_cast<double>(increases));

  const bool rho_ok = fit.rho_est >= 0.8 * rho;
  const bool r2_ok = fit.r2 >= 0.95 && fit.r2_constrained >= 0.95;
  const bool mono = increases == 0;
  c.pass_fraction = (static_cast<double>(rho_ok) + r2_ok + mono) / 3.0;
  c.worst_violation = std::max({0.0, 1.0 - fit.rho_est / (0.8 * rho), 0.95 - std::min(fit.r2, fit.r2_constrained)});
  c.verdict = rho_ok && r2_ok && mono ? Verdict::kPass : Verdict::kFail;
  if (fit.rho_est > 1.2 * rho) c.add_note("over_decay", "true");
  if (!mono) c.add_note("reason", "sup|h| increases inside the fit window");
  return c;
}

Certificate certify_decay(const TimeSeriesRecord& record, const ModelParams& model, const WeightParams& wp,
                          const DecayFitOptions& options) {
  std::vector<double> t, y;
  for (const auto& r : record.rows) {
    t.push_back(r.t);
    y.push_back(r.h_sup);
  }
  auto c = certify_decay(t, y, model, wp, options);
  if (record.unstable) {
    c.verdict = Verdict::kFail;
    c.add_note("reason", "run flagged unstable");
  }
  return c;
}

// ---------------------------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"nu", "k1", "k2", "klowcut", "kchi", "gamma", "entropy", "decay", "all"};
  return names;
}

std::vector<Certificate> run_suite(const std::string& suite, const SimulationConfig& base, const VerifySettings& settings) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw ConfigError("unknown suite '" + suite + "'; valid suites: " + list);
  }
  base.validate();
  const bool all = suite == "all";
  auto want = [&](const char* name) { return all || suite == name; };
  std::vector<Certificate> out;
  auto append = [&](std::vector<Certificate> v) { out.insert(out.end(), v.begin(), v.end()); };

  if (want("nu")) out.push_back(certify_nu_bounds(base.model, settings.nu));
  if (want("k1")) out.push_back(certify_k1_bound(base.model, base.radius, settings.k1_pairs, base.seed));

  const bool needs_op = want("k2") || want("klowcut") || want("kchi") || want("gamma") || want("entropy");
  std::unique_ptr<CollisionOperator> op;
  if (needs_op) op = std::make_unique<CollisionOperator>(VelocityGrid(base.radius, base.n_per_dim), base.model, base.collision);

  if (want("k2")) append(certify_k2_bumps(*op, settings.k2, base.seed));
  if (want("klowcut")) out.push_back(certify_klowcut_scaling(*op, base.weights, settings.eps_grid));
  if (want("kchi")) out.push_back(certify_kchi_weighted(*op, base.weights, settings.kchi, base.seed));
  if (want("gamma")) append(certify_gamma_bounds(*op, base.weights, settings.gamma, base.seed));
  if (want("entropy")) {
    std::vector<TimeSeriesRecord> records;
    for (int r = 0; r < settings.entropy_runs; ++r) {
      SimulationConfig cfg = base;
      cfg.layout = SpatialLayout::homogeneous();
      cfg.initial.kind = InitialKind::kBump;
      cfg.initial.amplitude = settings.entropy_amplitude;
      cfg.t_end = settings.entropy_t_end;
      cfg.seed = base.seed + static_cast<std::uint64_t>(r);
      auto rec = simulate(cfg, *op);
      records.push_back(settings.entropy_adversarial ? adversarial_entropy_record(rec) : std::move(rec));
    }
    out.push_back(certify_entropy(records, settings.entropy));
  }
  if (want("decay")) {
    SimulationConfig cfg = base;
    cfg.layout = SpatialLayout::homogeneous();
    cfg.n_per_dim = settings.decay_n_per_dim;
    cfg.dt = settings.decay_dt;
    cfg.t_end = settings.decay_t_end;
    cfg.initial.kind = InitialKind::kBump;
    cfg.initial.amplitude = settings.decay_amplitude;
    out.push_back(certify_decay(simulate(cfg), cfg.model, cfg.weights, settings.decay_fit));
  }
  return out;
}

}  // namespace softbte
