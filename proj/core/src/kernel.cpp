#include "softbte/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "softbte/errors.hpp"
#include "softbte/maxwellian.hpp"

namespace softbte {

namespace {

constexpr double kPi = std::numbers::pi;
using Gauss20 = boost::math::quadrature::gauss<double, 20>;

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * (3.0 - 2.0 * t);
}

// int_0^rb r^{gamma+2} m(r) dr via s = r^{gamma+3}, split where m has kinks.
double radial_moment(double rb, double gamma, const OffsetKernel::Multiplier& m, const std::vector<double>& kinks) {
  const double a = gamma + 3.0;
  std::vector<double> cuts{0.0};
  for (double c : kinks) {
    if (c > 0.0 && c < rb) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(rb);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double s0 = std::pow(cuts[i], a);
    const double s1 = std::pow(cuts[i + 1], a);
    total += Gauss20::integrate([&](double s) { return m(std::pow(s, 1.0 / a)); }, s0, s1);
  }
  return total / a;
}

// Average of |x|^gamma m(|x|) over the cube cell centred at g h (g != 0).
double cube_cell_average(const std::array<int, 3>& g, double h, double gamma, const OffsetKernel::Multiplier& m) {
  constexpr int kSub = 4;
  constexpr int kPts = 4;
  static const double kNodes[kPts] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
  static const double kWeights[kPts] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
  const double sub = h / kSub;
  double total = 0.0;
  for (int sz = 0; sz < kSub; ++sz)
    for (int sy = 0; sy < kSub; ++sy)
      for (int sx = 0; sx < kSub; ++sx) {
        const double cx = (g[0] - 0.5) * h + (sx + 0.5) * sub;
        const double cy = (g[1] - 0.5) * h + (sy + 0.5) * sub;
        const double cz = (g[2] - 0.5) * h + (sz + 0.5) * sub;
        for (int c = 0; c < kPts; ++c)
          for (int b = 0; b < kPts; ++b)
            for (int a = 0; a < kPts; ++a) {
              const double x = cx + 0.5 * sub * kNodes[a];
              const double y = cy + 0.5 * sub * kNodes[b];
              const double z = cz + 0.5 * sub * kNodes[c];
              const double r = std::sqrt(x * x + y * y + z * z);
              total += kWeights[a] * kWeights[b] * kWeights[c] * std::pow(r, gamma) * m(r);
            }
      }
  // each GL triple sums to 8; average over kSub^3 subcells
  return total / (8.0 * kSub * kSub * kSub);
}

}  // namespace

double cutoff_chi(double r, const ModelParams& params) {
  const double eps = params.eps_cutoff;
  return smoothstep((r - eps) / eps);
}

double kernel_k1(Vec3 v, Vec3 u, const ModelParams& params) {
  const double d = norm(v - u);
  if (d == 0.0) throw SingularPair("kernel_k1: u == v, use the cell-averaged diagonal");
  return 2.0 * kPi * std::pow(d, params.gamma) * std::sqrt(maxwellian(u) * maxwellian(v));
}

OffsetKernel::OffsetKernel(const VelocityGrid& grid, double gamma, const Multiplier& multiplier,
                           std::vector<double> kinks, int near_radius)
    : n_(grid.n()) {
  if (!(gamma > -3.0 && gamma < 0.0)) throw ConfigError("OffsetKernel: gamma must lie in (-3, 0)");
  if (near_radius < 0) throw ConfigError("OffsetKernel: near_radius must be >= 0");
  const double h = grid.spacing();
  const int e = extent();
  values_.assign(static_cast<std::size_t>(e) * e * e, 0.0);

  // Self cell: exact radial integral over the ball with the cell's volume.
  const double rb = h * std::cbrt(3.0 / (4.0 * kPi));
  values_[offset_index(0, 0, 0)] = 4.0 * kPi * radial_moment(rb, gamma, multiplier, kinks) / (h * h * h);

  const int nm = n_ - 1;
  for (int gz = -nm; gz <= nm; ++gz)
    for (int gy = -nm; gy <= nm; ++gy)
      for (int gx = -nm; gx <= nm; ++gx) {
        if (gx == 0 && gy == 0 && gz == 0) continue;
        const int inf = std::max({std::abs(gx), std::abs(gy), std::abs(gz)});
        double w;
        if (inf <= near_radius) {
          w = cube_cell_average({gx, gy, gz}, h, gamma, multiplier);
        } else {
          const double r = h * std::sqrt(static_cast<double>(gx * gx + gy * gy + gz * gz));
          w = std::pow(r, gamma) * multiplier(r);
        }
        values_[offset_index(gx, gy, gz)] = w;
        if (w != 0.0) support_radius_ = std::max(support_radius_, inf);
      }
}

KernelTable::KernelTable(const VelocityGrid& grid, const ModelParams& params, int near_radius)
    : grid_(grid),
      params_(params),
      sqrt_mu_(GridTables(grid).sqrt_mu),
      full_(grid, params.gamma, [](double) { return 1.0; }, {}, near_radius),
      chi_(grid, params.gamma, [p = params](double r) { return cutoff_chi(r, p); },
           {params.eps_cutoff, 2.0 * params.eps_cutoff}, near_radius),
      one_minus_chi_(grid, params.gamma, [p = params](double r) { return 1.0 - cutoff_chi(r, p); },
                     {params.eps_cutoff, 2.0 * params.eps_cutoff}, near_radius) {
  params.validate();
}

const OffsetKernel& KernelTable::part(KernelPart p) const noexcept {
  switch (p) {
    case KernelPart::kChi:
      return chi_;
    case KernelPart::kOneMinusChi:
      return one_minus_chi_;
    case KernelPart::kFull:
    default:
      return full_;
  }
}

double KernelTable::k1(std::size_t iv, std::size_t iu) const {
  const auto a = grid_.unflatten(iv);
  const auto b = grid_.unflatten(iu);
  return 2.0 * kPi * full_(a[0] - b[0], a[1] - b[1], a[2] - b[2]) * sqrt_mu_[iv] * sqrt_mu_[iu];
}

double KernelTable::chi(std::size_t iv, std::size_t iu) const {
  return cutoff_chi(norm(grid_.node(iv) - grid_.node(iu)), params_);
}

}  // namespace softbte
