#include "softbte/transport.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "softbte/errors.hpp"

namespace softbte {

namespace {

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct SpectralTransport::Plans {
  int nx = 0;
  int nv = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  mutable std::mutex use;

  Plans(int nx_, int nv_) : nx(nx_), nv(nv_) {
    const std::size_t modes = static_cast<std::size_t>(nx / 2 + 1);
    real = fftw_alloc_real(static_cast<std::size_t>(nx) * nv);
    spec = fftw_alloc_complex(modes * nv);
    if (real == nullptr || spec == nullptr) throw std::bad_alloc();
    const int n[] = {nx};
    std::lock_guard lock(planner_mutex());
    // One transform per velocity node: x is strided by nv, consecutive transforms are adjacent.
    forward = fftw_plan_many_dft_r2c(1, n, nv, real, nullptr, nv, 1, spec, nullptr, nv, 1, FFTW_ESTIMATE);
    backward = fftw_plan_many_dft_c2r(1, n, nv, spec, nullptr, nv, 1, real, nullptr, nv, 1, FFTW_ESTIMATE);
    if (forward == nullptr || backward == nullptr) throw Error("transport: FFTW planning failed");
  }
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (backward != nullptr) fftw_destroy_plan(backward);
    fftw_free(real);
    fftw_free(spec);
  }
};

SpectralTransport::SpectralTransport(const VelocityGrid& grid, SpatialLayout layout) : grid_(grid), layout_(layout) {
  if (layout_.kind == LayoutKind::kSlab) plans_ = std::make_unique<Plans>(layout_.nx, static_cast<int>(grid_.size()));
}

SpectralTransport::~SpectralTransport() = default;

void SpectralTransport::apply(DistributionField& field, double dt) const {
  if (field.layout().kind == LayoutKind::kHomogeneous) return;
  if (!(field.grid() == grid_) || field.layout().nx != layout_.nx) throw GridMismatch("transport: field layout differs from the plan");
  Plans& p = *plans_;
  std::lock_guard lock(p.use);
  const int nx = p.nx;
  const int nv = p.nv;
  const std::size_t total = static_cast<std::size_t>(nx) * nv;
  std::copy_n(field.values().data(), total, p.real);
  fftw_execute(p.forward);

  const double k0 = 2.0 * std::numbers::pi / layout_.period;
  const int modes = nx / 2 + 1;
  const bool has_nyquist = nx % 2 == 0;
  for (int iv = 0; iv < nv; ++iv) {
    const double shift = grid_.node(static_cast<std::size_t>(iv)).x * dt;
    for (int k = 1; k < modes; ++k) {
      fftw_complex& c = p.spec[static_cast<std::size_t>(k) * nv + iv];
      const double phase = -k0 * k * shift;
      if (has_nyquist && k == nx / 2) {
        // the real-valued Nyquist mode keeps only the cosine part of the shift
        c[0] *= std::cos(phase);
        c[1] = 0.0;
        continue;
      }
      const double cr = std::cos(phase), ci = std::sin(phase);
      const double re = c[0] * cr - c[1] * ci;
      const double im = c[0] * ci + c[1] * cr;
      c[0] = re;
      c[1] = im;
    }
  }
  fftw_execute(p.backward);
  const double inv = 1.0 / nx;
  double* dst = field.values().data();
  for (std::size_t i = 0; i < total; ++i) dst[i] = p.real[i] * inv;
}

void transport_step(DistributionField& field, double dt) {
  if (field.layout().kind == LayoutKind::kHomogeneous) return;
  SpectralTransport(field.grid(), field.layout()).apply(field, dt);
}

}  // namespace softbte
