#include "softbte/collision_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "softbte/errors.hpp"

namespace softbte {

namespace {

constexpr int kChunks = 32;

int floor_half(int g) { return g >= 0 ? g / 2 : -((1 - g) / 2); }

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) < 1e-9 ? r : x;
}

// Copy on a box padded by p nodes per side: zeros, or the nearest hull value.
std::vector<double> pad(std::span<const double> src, int n, int p, bool extend) {
  const int np = n + 2 * p;
  std::vector<double> out(static_cast<std::size_t>(np) * np * np, 0.0);
  auto clampi = [n](int i) { return std::clamp(i, 0, n - 1); };
  for (int k = 0; k < np; ++k)
    for (int j = 0; j < np; ++j) {
      const int sk = k - p, sj = j - p;
      double* row = out.data() + (static_cast<std::size_t>(k) * np + j) * np;
      if (!extend) {
        if (sk < 0 || sk >= n || sj < 0 || sj >= n) continue;
        std::copy_n(src.data() + (static_cast<std::size_t>(sk) * n + sj) * n, n, row + p);
        continue;
      }
      const double* s = src.data() + (static_cast<std::size_t>(clampi(sk)) * n + clampi(sj)) * n;
      for (int i = 0; i < np; ++i) row[i] = s[clampi(i - p)];
    }
  return out;
}

struct AxisSample {
  int base;     // floor of the offset
  double frac;  // offset - base
  int lo, hi;   // valid range of the m coordinate
};

}  // namespace

CollisionQuadrature::CollisionQuadrature(const VelocityGrid& grid, SphereRule rule, BoundaryMode boundary)
    : grid_(grid), rule_(std::move(rule)), boundary_(boundary) {
  if (rule_.size() == 0) throw ConfigError("collision quadrature: empty sphere rule");
  for (std::size_t i = 0; i < rule_.size(); ++i) {
    const Vec3 p = rule_.points[i];
    const Vec3 q = -p;
    bool found = false;
    for (std::size_t j = 0; j < rule_.size() && !found; ++j)
      found = norm(rule_.points[j] - q) < 1e-12 && std::abs(rule_.weights[j] - rule_.weights[i]) < 1e-15;
    if (!found) throw ConfigError("collision quadrature: sphere rule must be centrally symmetric");
  }
  build_groups();
  // largest sample excursion outside the hull is r = |g|/2 <= sqrt(3)(N-1)/2
  pad_ = boundary_ == BoundaryMode::kExtend ? static_cast<int>(std::ceil(std::sqrt(3.0) * (grid_.n() - 1) / 2.0)) + 2 : 1;
}

void CollisionQuadrature::build_groups() {
  const int n = grid_.n();
  const int nm = n - 1;
  std::map<std::tuple<int, int, int, int>, Group> by_key;
  for (int gz = -nm; gz <= nm; ++gz)
    for (int gy = -nm; gy <= nm; ++gy)
      for (int gx = -nm; gx <= nm; ++gx) {
        if (gx == 0 && gy == 0 && gz == 0) continue;
        const int r2 = gx * gx + gy * gy + gz * gz;
        const std::array<int, 3> par{gx & 1, gy & 1, gz & 1};
        Group& grp = by_key[{r2, par[0], par[1], par[2]}];
        grp.r2 = r2;
        grp.parity = par;
        grp.members.push_back({gx, gy, gz});
      }

  groups_.reserve(by_key.size());
  std::vector<int> xlo(static_cast<std::size_t>(n) * n);
  std::vector<int> xhi(static_cast<std::size_t>(n) * n);
  for (auto& [key, grp] : by_key) {
    std::fill(xlo.begin(), xlo.end(), n);
    std::fill(xhi.begin(), xhi.end(), -1);
    grp.max_inf_norm = 0;
    grp.min_inf_norm = n;
    for (const auto& g : grp.members) {
      const int inf = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
      grp.max_inf_norm = std::max(grp.max_inf_norm, inf);
      grp.min_inf_norm = std::min(grp.min_inf_norm, inf);
      std::array<int, 3> lo{}, hi{};
      for (int d = 0; d < 3; ++d) {
        lo[d] = std::max(0, -g[d]) + floor_half(g[d]);
        hi[d] = std::min(nm, nm - g[d]) + floor_half(g[d]);
      }
      for (int mz = lo[2]; mz <= hi[2]; ++mz)
        for (int my = lo[1]; my <= hi[1]; ++my) {
          const std::size_t r = static_cast<std::size_t>(mz) * n + my;
          xlo[r] = std::min(xlo[r], lo[0]);
          xhi[r] = std::max(xhi[r], hi[0]);
        }
    }
    for (int mz = 0; mz < n; ++mz)
      for (int my = 0; my < n; ++my) {
        const std::size_t r = static_cast<std::size_t>(mz) * n + my;
        if (xhi[r] >= xlo[r]) {
          grp.rows.push_back({static_cast<std::int16_t>(my), static_cast<std::int16_t>(mz),
                              static_cast<std::int16_t>(xlo[r]), static_cast<std::int16_t>(xhi[r])});
        }
      }
    groups_.push_back(std::move(grp));
  }
}

double CollisionQuadrature::pair_sum(std::span<const double> a, std::span<const double> b, std::span<const double> pre,
                                     std::span<const PairSumTarget> targets, const LeakageInput* leak) const {
  const int n = grid_.n();
  const std::size_t total = grid_.size();
  const bool unit_a = a.empty();
  if ((!unit_a && a.size() != total) || b.size() != total || pre.size() != total) {
    throw GridMismatch("collision quadrature: input arrays do not match the grid");
  }
  for (const auto& t : targets) {
    if (t.kernel == nullptr || t.out.size() != total || t.kernel->n() != n) {
      throw GridMismatch("collision quadrature: target does not match the grid");
    }
  }
  if (leak != nullptr && (leak->kernel == nullptr || leak->at_u.size() != total || leak->at_v.size() != total)) {
    throw GridMismatch("collision quadrature: leakage input does not match the grid");
  }

  const bool extend = boundary_ == BoundaryMode::kExtend;
  const int P = pad_;
  const int np = n + 2 * P;
  const std::size_t np2 = static_cast<std::size_t>(np) * np;
  const std::vector<double> pa = unit_a ? std::vector<double>{} : pad(a, n, P, extend);
  const std::vector<double> pb = pad(b, n, P, extend);
  // origin of the padded arrays shifted so that hull index 0 maps to padded index P
  const std::ptrdiff_t origin = static_cast<std::ptrdiff_t>(P) * (np2 + np + 1);
  const double* A = pa.data() + origin;
  const double* B = pb.data() + origin;
  const std::size_t nt = targets.size();
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  int support = 0;
  for (const auto& t : targets) support = std::max(support, t.kernel->support_radius());
  if (leak != nullptr) support = std::max(support, leak->kernel->support_radius());

  // Contiguous group ranges with roughly equal work; the partition depends only on the grid.
  std::vector<double> cost(groups_.size());
  for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
    double c = 0.0;
    for (const auto& r : groups_[gi].rows) c += r.xhi - r.xlo + 1;
    cost[gi] = c * static_cast<double>(rule_.size()) + static_cast<double>(groups_[gi].members.size()) * nn;
  }
  const double total_cost = std::accumulate(cost.begin(), cost.end(), 0.0);
  std::vector<std::size_t> bounds{0};
  {
    double acc = 0.0;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      acc += cost[gi];
      if (acc >= total_cost * static_cast<double>(bounds.size()) / kChunks && bounds.size() < kChunks) bounds.push_back(gi + 1);
    }
    while (bounds.size() <= kChunks) bounds.push_back(groups_.size());
  }

  std::vector<std::vector<double>> chunk_out(kChunks);
  std::vector<double> chunk_leak(kChunks, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
  for (int ch = 0; ch < kChunks; ++ch) {
    std::vector<double>& acc = chunk_out[ch];
    acc.assign(nt * total, 0.0);
    std::vector<double> S(total, 0.0);
    std::vector<double> V(leak != nullptr ? total : 0, 0.0);
    double leaked = 0.0;

    for (std::size_t gi = bounds[ch]; gi < bounds[ch + 1]; ++gi) {
      const Group& grp = groups_[gi];
      if (grp.min_inf_norm > support) continue;
      const double half_r = 0.5 * std::sqrt(static_cast<double>(grp.r2));

      for (const auto& row : grp.rows) {
        double* s = S.data() + (static_cast<std::size_t>(row.mz) * n + row.my) * n;
        std::fill(s + row.xlo, s + row.xhi + 1, 0.0);
        if (leak != nullptr) {
          double* vv = V.data() + (static_cast<std::size_t>(row.mz) * n + row.my) * n;
          std::fill(vv + row.xlo, vv + row.xhi + 1, 0.0);
        }
      }

      for (std::size_t q = 0; q < rule_.size(); ++q) {
        const Vec3 sig = rule_.points[q];
        const double w = rule_.weights[q];
        AxisSample ua[3], ub[3];
        bool empty = false;  // no in-hull sample for this direction
        for (int d = 0; d < 3; ++d) {
          const double op = snap(0.5 * grp.parity[d] + half_r * sig[d]);
          const double om = snap(0.5 * grp.parity[d] - half_r * sig[d]);
          const int lo = static_cast<int>(std::ceil(std::max(-op, -om)));
          const int hi = static_cast<int>(std::floor(n - 1 - std::max(op, om)));
          ub[d] = {static_cast<int>(std::floor(op)), op - std::floor(op), lo, hi};
          ua[d] = {static_cast<int>(std::floor(om)), om - std::floor(om), lo, hi};
          if (hi < lo) empty = true;
        }
        if (empty && !extend) continue;
        const double fxa = ua[0].frac, fxb = ub[0].frac;

        for (const auto& row : grp.rows) {
          const bool row_inside = row.my >= ua[1].lo && row.my <= ua[1].hi && row.mz >= ua[2].lo && row.mz <= ua[2].hi;
          const int v0 = row_inside ? std::max<int>(row.xlo, ua[0].lo) : 1;
          const int v1 = row_inside ? std::min<int>(row.xhi, ua[0].hi) : 0;
          const int x0 = extend ? row.xlo : v0;
          const int x1 = extend ? row.xhi : v1;
          if (x1 < x0) continue;

          // B stencil rows
          const int byi = row.my + ub[1].base, bzi = row.mz + ub[2].base;
          const double by = ub[1].frac, bz = ub[2].frac;
          const double* b00 = B + static_cast<std::ptrdiff_t>(bzi) * static_cast<std::ptrdiff_t>(np2) + static_cast<std::ptrdiff_t>(byi) * np + ub[0].base;
          const double* b10 = b00 + np;
          const double* b01 = b00 + np2;
          const double* b11 = b01 + np;
          const double wb00 = (1 - by) * (1 - bz), wb10 = by * (1 - bz), wb01 = (1 - by) * bz, wb11 = by * bz;

          double* s = S.data() + (static_cast<std::size_t>(row.mz) * n + row.my) * n;
          if (unit_a) {
            for (int mx = x0; mx <= x1; ++mx) {
              const double r0 = wb00 * b00[mx] + wb10 * b10[mx] + wb01 * b01[mx] + wb11 * b11[mx];
              const double r1 = wb00 * b00[mx + 1] + wb10 * b10[mx + 1] + wb01 * b01[mx + 1] + wb11 * b11[mx + 1];
              s[mx] += w * ((1 - fxb) * r0 + fxb * r1);
            }
          } else {
            const int ayi = row.my + ua[1].base, azi = row.mz + ua[2].base;
            const double ay = ua[1].frac, az = ua[2].frac;
            const double* a00 = A + static_cast<std::ptrdiff_t>(azi) * static_cast<std::ptrdiff_t>(np2) + static_cast<std::ptrdiff_t>(ayi) * np + ua[0].base;
            const double* a10 = a00 + np;
            const double* a01 = a00 + np2;
            const double* a11 = a01 + np;
            const double wa00 = (1 - ay) * (1 - az), wa10 = ay * (1 - az), wa01 = (1 - ay) * az, wa11 = ay * az;
            for (int mx = x0; mx <= x1; ++mx) {
              const double p0 = wa00 * a00[mx] + wa10 * a10[mx] + wa01 * a01[mx] + wa11 * a11[mx];
              const double p1 = wa00 * a00[mx + 1] + wa10 * a10[mx + 1] + wa01 * a01[mx + 1] + wa11 * a11[mx + 1];
              const double r0 = wb00 * b00[mx] + wb10 * b10[mx] + wb01 * b01[mx] + wb11 * b11[mx];
              const double r1 = wb00 * b00[mx + 1] + wb10 * b10[mx + 1] + wb01 * b01[mx + 1] + wb11 * b11[mx + 1];
              s[mx] += w * ((1 - fxa) * p0 + fxa * p1) * ((1 - fxb) * r0 + fxb * r1);
            }
          }
          if (leak != nullptr) {
            double* vv = V.data() + (static_cast<std::size_t>(row.mz) * n + row.my) * n;
            for (int mx = v0; mx <= v1; ++mx) vv[mx] += w;
          }
        }
      }

      // Scatter S to every member offset: out[u + g] += W(g) pre[u] S[m(u)].
      for (const auto& g : grp.members) {
        const int inf = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
        if (inf > support) continue;
        std::array<int, 3> lo{}, hi{}, fh{};
        for (int d = 0; d < 3; ++d) {
          lo[d] = std::max(0, -g[d]);
          hi[d] = std::min(n - 1, n - 1 - g[d]);
          fh[d] = floor_half(g[d]);
        }
        const int len = hi[0] - lo[0] + 1;
        for (std::size_t t = 0; t < nt; ++t) {
          const OffsetKernel& ker = *targets[t].kernel;
          const double wg = ker(g[0], g[1], g[2]);
          if (wg == 0.0) continue;
          double* out = acc.data() + t * total;
          for (int uz = lo[2]; uz <= hi[2]; ++uz)
            for (int uy = lo[1]; uy <= hi[1]; ++uy) {
              const std::size_t ui = grid_.index(lo[0], uy, uz);
              const std::size_t vi = grid_.index(lo[0] + g[0], uy + g[1], uz + g[2]);
              const std::size_t mi = grid_.index(lo[0] + fh[0], uy + fh[1], uz + fh[2]);
              const double* pr = pre.data() + ui;
              const double* sm = S.data() + mi;
              double* o = out + vi;
              for (int x = 0; x < len; ++x) o[x] += wg * pr[x] * sm[x];
            }
        }
        if (leak != nullptr) {
          const double wg = (*leak->kernel)(g[0], g[1], g[2]);
          if (wg == 0.0) continue;
          double l = 0.0;
          for (int uz = lo[2]; uz <= hi[2]; ++uz)
            for (int uy = lo[1]; uy <= hi[1]; ++uy) {
              const std::size_t ui = grid_.index(lo[0], uy, uz);
              const std::size_t vi = grid_.index(lo[0] + g[0], uy + g[1], uz + g[2]);
              const std::size_t mi = grid_.index(lo[0] + fh[0], uy + fh[1], uz + fh[2]);
              for (int x = 0; x < len; ++x) l += leak->at_u[ui + x] * leak->at_v[vi + x] * (1.0 - V[mi + x]);
            }
          leaked += wg * l;
        }
      }
    }

    if (ch == 0) {
      // Self pair u = v: the sphere collapses to a point.
      for (std::size_t t = 0; t < nt; ++t) {
        const double w0 = (*targets[t].kernel)(0, 0, 0);
        double* out = acc.data() + t * total;
        for (std::size_t i = 0; i < total; ++i) out[i] += w0 * pre[i] * (unit_a ? 1.0 : a[i]) * b[i];
      }
    }
    chunk_leak[ch] = leaked;
  }

  for (std::size_t t = 0; t < nt; ++t) {
    auto out = targets[t].out;
    std::fill(out.begin(), out.end(), 0.0);
    for (int ch = 0; ch < kChunks; ++ch) {
      const double* src = chunk_out[ch].data() + t * total;
      for (std::size_t i = 0; i < total; ++i) out[i] += src[i];
    }
  }
  double leaked = 0.0;
  for (double l : chunk_leak) leaked += l;
  return leaked;
}

}  // namespace softbte
