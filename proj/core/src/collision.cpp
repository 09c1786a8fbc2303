#include "softbte/collision.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "softbte/errors.hpp"

namespace softbte {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

CollisionOperator::CollisionOperator(const VelocityGrid& grid, const ModelParams& params, CollisionSettings settings)
    : grid_(grid),
      params_(params),
      settings_(settings),
      tables_(grid),
      kernels_(grid, params),
      quadrature_(grid, lebedev_rule(settings.sphere_points), settings.boundary),
      ones_(grid.size(), 1.0) {
  params_.validate();
  nu_h_ = loss_frequency(tables_.mu);
}

void CollisionOperator::check(std::span<const double> a) const {
  if (a.size() != grid_.size()) {
    throw GridMismatch("collision operator: array of size " + std::to_string(a.size()) + " on a grid of " +
                       std::to_string(grid_.size()) + " nodes");
  }
}

std::vector<double> CollisionOperator::loss_frequency(std::span<const double> g, KernelPart part) const {
  return loss_frequency(g, kernels_.part(part));
}

std::vector<double> CollisionOperator::loss_frequency(std::span<const double> g, const OffsetKernel& kernel) const {
  check(g);
  if (kernel.n() != grid_.n()) throw GridMismatch("loss_frequency: kernel table built for another grid");
  const int n = grid_.n();
  const int reach = std::min(n - 1, kernel.support_radius());
  std::vector<double> out(grid_.size(), 0.0);
  const double scale = kTwoPi * grid_.cell_volume();

#pragma omp parallel for schedule(static)
  for (int vz = 0; vz < n; ++vz) {
    for (int dz = -reach; dz <= reach; ++dz) {
      const int uz = vz - dz;
      if (uz < 0 || uz >= n) continue;
      for (int dy = -reach; dy <= reach; ++dy) {
        const int vy_lo = std::max(0, dy), vy_hi = std::min(n - 1, n - 1 + dy);
        for (int dx = -reach; dx <= reach; ++dx) {
          const double w = kernel(dx, dy, dz);
          if (w == 0.0) continue;
          const int vx_lo = std::max(0, dx), vx_hi = std::min(n - 1, n - 1 + dx);
          const int len = vx_hi - vx_lo + 1;
          for (int vy = vy_lo; vy <= vy_hi; ++vy) {
            double* o = out.data() + grid_.index(vx_lo, vy, vz);
            const double* src = g.data() + grid_.index(vx_lo - dx, vy - dy, uz);
            for (int x = 0; x < len; ++x) o[x] += w * src[x];
          }
        }
      }
    }
  }
  for (double& v : out) v *= scale;
  return out;
}

std::vector<double> CollisionOperator::gain(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag) const {
  check(g);
  check(f);
  const std::size_t m = grid_.size();
  const auto& mu = tables_.mu;
  std::vector<double> out(m);
  const PairSumTarget target{&kernels_.part(KernelPart::kFull), out};
  const LeakageInput leak{g, f, &kernels_.part(KernelPart::kFull)};
  const LeakageInput* lp = diag != nullptr ? &leak : nullptr;
  double leaked = 0.0;
  const double scale = kTwoPi * grid_.cell_volume();
  if (settings_.interpolation == InterpolationMode::kMaxwellWeighted) {
    std::vector<double> a(m), b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = g[i] / mu[i];
      b[i] = f[i] / mu[i];
    }
    leaked = quadrature_.pair_sum(a, b, mu, std::span(&target, 1), lp);
    for (std::size_t i = 0; i < m; ++i) out[i] *= scale * mu[i];
  } else {
    leaked = quadrature_.pair_sum(g, f, ones_, std::span(&target, 1), lp);
    for (double& v : out) v *= scale;
  }
  if (diag != nullptr) diag->leakage += leaked * scale * grid_.cell_volume();
  return out;
}

std::vector<double> CollisionOperator::loss(std::span<const double> g, std::span<const double> f) const {
  check(f);
  std::vector<double> out = loss_frequency(g);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= f[i];
  return out;
}

std::vector<double> CollisionOperator::collide(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag) const {
  std::vector<double> out = gain(g, f, diag);
  const std::vector<double> l = loss(g, f);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= l[i];
  return out;
}

std::vector<double> CollisionOperator::gamma_plus(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag) const {
  check(g);
  check(f);
  const auto& sm = tables_.sqrt_mu;
  std::vector<double> lg(g.size()), lf(f.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    lg[i] = sm[i] * g[i];
    lf[i] = sm[i] * f[i];
  }
  std::vector<double> out = gain(lg, lf, diag);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= sm[i];
  return out;
}

std::vector<double> CollisionOperator::gamma_minus(std::span<const double> g, std::span<const double> f) const {
  check(g);
  check(f);
  const auto& sm = tables_.sqrt_mu;
  std::vector<double> lg(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) lg[i] = sm[i] * g[i];
  std::vector<double> out = loss_frequency(lg);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= f[i];
  return out;
}

std::vector<double> CollisionOperator::gamma_nl(std::span<const double> g, std::span<const double> f, CollisionDiagnostics* diag) const {
  std::vector<double> out = gamma_plus(g, f, diag);
  const std::vector<double> m = gamma_minus(g, f);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= m[i];
  return out;
}

std::vector<double> CollisionOperator::apply_K1_with(std::span<const double> f, const OffsetKernel& kernel) const {
  check(f);
  const auto& sm = tables_.sqrt_mu;
  std::vector<double> lifted(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) lifted[i] = sm[i] * f[i];
  std::vector<double> out = loss_frequency(lifted, kernel);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= sm[i];
  return out;
}

std::vector<double> CollisionOperator::apply_K1(std::span<const double> f, KernelPart part) const {
  return apply_K1_with(f, kernels_.part(part));
}

void CollisionOperator::apply_K2_multi(std::span<const double> f, std::span<const OffsetKernel* const> kernels,
                                       std::span<std::vector<double>* const> outs, CollisionDiagnostics* diag) const {
  check(f);
  const std::size_t m = grid_.size();
  const auto& mu = tables_.mu;
  const auto& sm = tables_.sqrt_mu;
  std::vector<PairSumTarget> targets;
  for (std::size_t k = 0; k < kernels.size(); ++k) {
    if (kernels[k]->n() != grid_.n()) throw GridMismatch("apply_K2: kernel table built for another grid");
    outs[k]->assign(m, 0.0);
    targets.push_back({kernels[k], *outs[k]});
  }
  std::vector<double> leak_v;
  LeakageInput leak;
  if (diag != nullptr) {
    leak_v.resize(m);
    for (std::size_t i = 0; i < m; ++i) leak_v[i] = 2.0 * sm[i] * std::abs(f[i]);
    leak = {mu, leak_v, &kernels_.part(KernelPart::kFull)};
  }
  const double scale = kTwoPi * grid_.cell_volume();
  double leaked = 0.0;
  if (settings_.interpolation == InterpolationMode::kMaxwellWeighted) {
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = f[i] / sm[i];
    leaked = quadrature_.pair_sum({}, b, mu, targets, diag != nullptr ? &leak : nullptr);
    for (auto* o : outs)
      for (std::size_t i = 0; i < m; ++i) (*o)[i] *= 2.0 * scale * sm[i];
  } else {
    leaked = quadrature_.pair_sum(f, sm, sm, targets, diag != nullptr ? &leak : nullptr);
    for (auto* o : outs)
      for (double& v : *o) v *= 2.0 * scale;
  }
  if (diag != nullptr) diag->leakage += leaked * scale * grid_.cell_volume();
}

std::vector<double> CollisionOperator::apply_K2_with(std::span<const double> f, const OffsetKernel& kernel, CollisionDiagnostics* diag) const {
  std::vector<double> out;
  const OffsetKernel* k[] = {&kernel};
  std::vector<double>* o[] = {&out};
  apply_K2_multi(f, k, o, diag);
  return out;
}

std::vector<double> CollisionOperator::apply_K2(std::span<const double> f, KernelPart part, CollisionDiagnostics* diag) const {
  return apply_K2_with(f, kernels_.part(part), diag);
}

std::vector<double> CollisionOperator::apply_K(std::span<const double> f, CollisionDiagnostics* diag) const {
  std::vector<double> out = apply_K2(f, KernelPart::kFull, diag);
  const std::vector<double> k1 = apply_K1(f);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k1[i];
  return out;
}

KSplit CollisionOperator::apply_K_splits(std::span<const double> f, CollisionDiagnostics* diag) const {
  KSplit split;
  const OffsetKernel* k[] = {&kernels_.part(KernelPart::kChi), &kernels_.part(KernelPart::kOneMinusChi)};
  std::vector<double>* o[] = {&split.chi, &split.one_minus_chi};
  apply_K2_multi(f, k, o, diag);
  const std::vector<double> k1c = apply_K1(f, KernelPart::kChi);
  const std::vector<double> k1n = apply_K1(f, KernelPart::kOneMinusChi);
  for (std::size_t i = 0; i < f.size(); ++i) {
    split.chi[i] -= k1c[i];
    split.one_minus_chi[i] -= k1n[i];
  }
  return split;
}

double CollisionOperator::entropy_production(std::span<const double> f) const {
  check(f);
  for (double x : f) {
    if (!(x > 0.0)) throw DomainError("entropy_production: F must be positive at every node");
  }
  const std::vector<double> q = collide(f, f);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += q[i] * std::log(f[i]);
  return s * grid_.cell_volume();
}

}  // namespace softbte
