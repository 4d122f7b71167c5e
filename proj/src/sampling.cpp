// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "mcoords/error.hpp"
#include "mcoords/reference_shapes.hpp"

namespace mcoords {

namespace {

double segment_distance(Point2 a, Point2 b, Point2 p) {
  const Point2 e = b - a;
  const double t = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
  return distance(a + t * e, p);
}

// Corners not too flat, vertices well away from non-incident edges.
bool well_shaped(const Quadrilateral& q) {
  const double d = q.diameter();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(signed_area(q.vertex(i - 1), q.vertex(i), q.vertex(i + 1))) < 0.05 * d * d) return false;
    if (segment_distance(q.vertex(i + 1), q.vertex(i + 2), q.vertex(i)) < 0.1 * d) return false;
    if (segment_distance(q.vertex(i + 2), q.vertex(i + 3), q.vertex(i)) < 0.1 * d) return false;
  }
  return true;
}

}  // namespace

Quadrilateral random_simple_quad(Rng& rng) {
  for (;;) {
    std::array<Point2, 4> v{};
    for (auto& p : v) p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (!validate_quad(v).ok()) continue;
    Quadrilateral q(v);
    if (well_shaped(q)) return q;
  }
}

Quadrilateral random_convex_quad(Rng& rng) {
  for (;;) {
    Quadrilateral q = random_simple_quad(rng);
    if (q.is_convex()) return q;
  }
}

Hexahedron random_affine_cube(Rng& rng) {
  for (;;) {
    std::array<std::array<double, 3>, 3> a{};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a[r][c] = (r == c ? 1.0 : 0.0) + rng.uniform(-0.5, 0.5);
    }
    const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if (std::abs(det) < 0.3) continue;
    const double scale = rng.uniform(0.5, 3.0);
    const Point3 shift{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Hexahedron cube = shapes::biunit_cube();
    std::array<Point3, 8> v{};
    for (int i = 0; i < 8; ++i) {
      const Point3 c = cube.vertex(i);
      const Point3 image{a[0][0] * c.x + a[0][1] * c.y + a[0][2] * c.z, a[1][0] * c.x + a[1][1] * c.y + a[1][2] * c.z,
                         a[2][0] * c.x + a[2][1] * c.y + a[2][2] * c.z};
      v[static_cast<std::size_t>(i)] = scale * image + shift;
    }
    return Hexahedron(v);
  }
}

Point2 sample_interior(const Quadrilateral& quad, Rng& rng) {
  double lo_x = quad.vertex(0).x, hi_x = lo_x, lo_y = quad.vertex(0).y, hi_y = lo_y;
  for (const auto& v : quad.vertices()) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  for (;;) {
    const Point2 p{rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y)};
    if (classify_point_quad(quad, p).kind == PointLocation::Kind::interior) return p;
  }
}

Point3 sample_interior(const Hexahedron& hex, Rng& rng) {
  const double u[3] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  Point3 p{};
  for (std::size_t i = 0; i < 8; ++i) {
    double weight = 0.125;
    for (std::size_t r = 0; r < 3; ++r) weight *= 1.0 + kHexSignPattern[r][i] * u[r];
    p = p + weight * hex.vertex(static_cast<int>(i));
  }
  return p;
}

Point3 sample_on_face(const Hexahedron& hex, int face, Rng& rng) {
  const auto& f = kHexFaces[static_cast<std::size_t>(face)];
  const double a = rng.uniform(0.0, 1.0);
  const double b = rng.uniform(0.0, 1.0);
  return (1 - a) * (1 - b) * hex.vertex(f[0]) + a * (1 - b) * hex.vertex(f[1]) + a * b * hex.vertex(f[2]) +
         (1 - a) * b * hex.vertex(f[3]);
}

}  // namespace mcoords
