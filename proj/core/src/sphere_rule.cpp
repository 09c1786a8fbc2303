#include "softbte/sphere_rule.hpp"

#include <cmath>
#include <string>

#include "softbte/errors.hpp"

namespace softbte {

namespace {

void add(SphereRule& r, Vec3 p, double w) {
  r.points.push_back(p);
  r.weights.push_back(w);
}

void add_axes(SphereRule& r, double w) {
  for (double s : {1.0, -1.0}) {
    add(r, {s, 0, 0}, w);
    add(r, {0, s, 0}, w);
    add(r, {0, 0, s}, w);
  }
}

void add_edge_midpoints(SphereRule& r, double w) {
  const double a = 1.0 / std::sqrt(2.0);
  for (double s : {a, -a})
    for (double t : {a, -a}) {
      add(r, {0, s, t}, w);
      add(r, {s, 0, t}, w);
      add(r, {s, t, 0}, w);
    }
}

void add_vertices(SphereRule& r, double w) {
  const double a = 1.0 / std::sqrt(3.0);
  for (double x : {a, -a})
    for (double y : {a, -a})
      for (double z : {a, -a}) add(r, {x, y, z}, w);
}

// (+-l, +-l, +-m) and permutations
void add_llm(SphereRule& r, double l, double m, double w) {
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0})
      for (double s3 : {1.0, -1.0}) {
        add(r, {s1 * l, s2 * l, s3 * m}, w);
        add(r, {s1 * l, s3 * m, s2 * l}, w);
        add(r, {s3 * m, s1 * l, s2 * l}, w);
      }
}

// (+-p, +-q, 0) and permutations
void add_pq0(SphereRule& r, double p, double q, double w) {
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      const double a = s1 * p;
      const double b = s2 * q;
      add(r, {a, b, 0}, w);
      add(r, {b, a, 0}, w);
      add(r, {a, 0, b}, w);
      add(r, {b, 0, a}, w);
      add(r, {0, a, b}, w);
      add(r, {0, b, a}, w);
    }
}

}  // namespace

SphereRule lebedev_rule(int points) {
  SphereRule r;
  switch (points) {
    case 6:
      add_axes(r, 1.0 / 6.0);
      r.degree = 3;
      break;
    case 14:
      add_axes(r, 1.0 / 15.0);
      add_vertices(r, 3.0 / 40.0);
      r.degree = 5;
      break;
    case 26:
      add_axes(r, 1.0 / 21.0);
      add_edge_midpoints(r, 4.0 / 105.0);
      add_vertices(r, 9.0 / 280.0);
      r.degree = 7;
      break;
    case 38:
      add_axes(r, 1.0 / 105.0);
      add_vertices(r, 9.0 / 280.0);
      add_pq0(r, 0.4597008433809831, 0.8880738339771153, 1.0 / 35.0);
      r.degree = 9;
      break;
    case 50:
      add_axes(r, 4.0 / 315.0);
      add_edge_midpoints(r, 64.0 / 2835.0);
      add_vertices(r, 27.0 / 1280.0);
      add_llm(r, 1.0 / std::sqrt(11.0), 3.0 / std::sqrt(11.0), 14641.0 / 725760.0);
      r.degree = 11;
      break;
    default:
      throw ConfigError("sphere rule: unsupported point count " + std::to_string(points) + " (valid: 6, 14, 26, 38, 50)");
  }
  return r;
}

}  // namespace softbte
