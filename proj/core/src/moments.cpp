#include "softbte/moments.hpp"

#include <Eigen/Dense>

#include "softbte/errors.hpp"

namespace softbte {

MomentVector moments(const VelocityGrid& grid, std::span<const double> values) {
  if (values.size() != grid.size()) throw GridMismatch("moments: array does not match the grid");
  MomentVector m;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Vec3 v = grid.node(i);
    const double f = values[i];
    m.mass += f;
    m.momentum[0] += v.x * f;
    m.momentum[1] += v.y * f;
    m.momentum[2] += v.z * f;
    m.energy += 0.5 * norm2(v) * f;
  }
  const double h3 = grid.cell_volume();
  m.mass *= h3;
  for (double& p : m.momentum) p *= h3;
  m.energy *= h3;
  return m;
}

MomentVector moments(const DistributionField& field) {
  MomentVector total;
  for (int ix = 0; ix < field.slices(); ++ix) {
    const MomentVector m = moments(field.grid(), field.slice(ix));
    total.mass += m.mass;
    for (int d = 0; d < 3; ++d) total.momentum[d] += m.momentum[d];
    total.energy += m.energy;
  }
  const double inv = 1.0 / field.slices();
  total.mass *= inv;
  for (double& p : total.momentum) p *= inv;
  total.energy *= inv;
  return total;
}

ConservationProjector::ConservationProjector(const VelocityGrid& grid) : grid_(grid) {
  const GridTables t(grid);
  mu_ = t.mu;
  basis_.resize(grid.size());
  Eigen::Matrix<double, 5, 5> gram = Eigen::Matrix<double, 5, 5>::Zero();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3 v = t.nodes[i];
    basis_[i] = {1.0, v.x, v.y, v.z, t.speed2[i]};
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) gram(a, b) += mu_[i] * basis_[i][a] * basis_[i][b];
  }
  gram *= grid.cell_volume();
  Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(gram);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw ConfigError("conservation projection: singular Gram matrix (degenerate grid)");
  const Eigen::Matrix<double, 5, 5> inv = lu.inverse();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) gram_inverse_[a * 5 + b] = inv(a, b);
}

std::vector<double> ConservationProjector::correction(std::span<const double> values) const {
  if (values.size() != grid_.size()) throw GridMismatch("conservation projection: array does not match the grid");
  std::array<double, 5> rhs{};
  for (std::size_t i = 0; i < values.size(); ++i)
    for (int a = 0; a < 5; ++a) rhs[a] += basis_[i][a] * values[i];
  for (double& r : rhs) r *= grid_.cell_volume();
  std::array<double, 5> lambda{};
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) lambda[a] += gram_inverse_[a * 5 + b] * rhs[b];
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double s = 0.0;
    for (int a = 0; a < 5; ++a) s += lambda[a] * basis_[i][a];
    out[i] = mu_[i] * s;
  }
  return out;
}

void ConservationProjector::project(std::span<double> values) const {
  const std::vector<double> c = correction(values);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= c[i];
}

std::vector<double> ConservationProjector::projected(std::span<const double> values) const {
  std::vector<double> out(values.begin(), values.end());
  project(out);
  return out;
}

}  // namespace softbte
