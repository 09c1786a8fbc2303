#include "softbte/decay_fit.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "softbte/errors.hpp"

namespace softbte {

namespace {

struct LineFit {
  double a = 0.0;
  double lambda = 0.0;
  double sse = 0.0;
};

// ln y = a - lambda x with x = t^p
LineFit fit_line(const std::vector<double>& t, const std::vector<double>& ly, double p) {
  const std::size_t n = t.size();
  std::vector<double> x(n);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::pow(t[i], p);
    mx += x[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (ly[i] - my);
  }
  LineFit f;
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.lambda = -slope;
  f.a = my - slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (f.a + slope * x[i]);
    f.sse += r * r;
  }
  return f;
}

}  // namespace

DecayFit decay_fit(std::span<const double> t, std::span<const double> y, double rho_hint, const DecayFitOptions& options) {
  if (t.size() != y.size()) throw FitDegenerate("decay_fit: t and y differ in length");
  if (t.size() < options.min_rows) {
    throw FitDegenerate("decay_fit: " + std::to_string(t.size()) + " rows, at least " + std::to_string(options.min_rows) + " required");
  }
  const auto first = static_cast<std::size_t>(std::floor(options.drop_fraction * static_cast<double>(t.size())));
  std::vector<double> tw, lw;
  for (std::size_t i = first; i < t.size(); ++i) {
    if (!(y[i] > 0.0) || !std::isfinite(y[i])) throw FitDegenerate("decay_fit: non-positive value in the fit window");
    if (t[i] < 0.0) throw FitDegenerate("decay_fit: negative time");
    tw.push_back(t[i]);
    lw.push_back(std::log(y[i]));
  }
  if (tw.size() < 3) throw FitDegenerate("decay_fit: fewer than 3 rows in the fit window");
  if (!(lw.back() < lw.front())) throw FitDegenerate("decay_fit: data does not decay over the fit window");

  double mean = 0.0;
  for (double v : lw) mean += v;
  mean /= lw.size();
  double sst = 0.0;
  for (double v : lw) sst += (v - mean) * (v - mean);
  if (!(sst > 0.0)) throw FitDegenerate("decay_fit: constant data");

  // coarse log-spaced scan, then Brent inside the best bracket
  const int scan = 240;
  const double lo = std::log(options.p_min), hi = std::log(options.p_max);
  auto p_at = [&](int k) { return std::exp(lo + (hi - lo) * k / scan); };
  int best = 0;
  double best_sse = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= scan; ++k) {
    const double sse = fit_line(tw, lw, p_at(k)).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = k;
    }
  }
  const double a = p_at(std::max(0, best - 1));
  const double b = p_at(std::min(scan, best + 1));
  const auto [p_opt, sse_opt] = boost::math::tools::brent_find_minima(
      [&](double p) { return fit_line(tw, lw, p).sse; }, a, b, std::numeric_limits<double>::digits);

  const LineFit free_fit = fit_line(tw, lw, p_opt);
  if (!(free_fit.lambda > 0.0)) throw FitDegenerate("decay_fit: fitted lambda is not positive");
  DecayFit out;
  out.a = free_fit.a;
  out.lambda = free_fit.lambda;
  out.rho_est = p_opt;
  out.r2 = 1.0 - sse_opt / sst;
  out.rho_hint = rho_hint;
  const LineFit c = fit_line(tw, lw, rho_hint);
  out.a_constrained = c.a;
  out.lambda_constrained = c.lambda;
  out.r2_constrained = 1.0 - c.sse / sst;
  out.rows_used = tw.size();
  out.t_first = tw.front();
  out.t_last = tw.back();
  return out;
}

}  // namespace softbte
