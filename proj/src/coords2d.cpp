// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/coords2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcoords/error.hpp"
#include "mcoords/smallsolve.hpp"

namespace mcoords {

namespace {

constexpr std::array<double, 4> kAlternating{+1.0, -1.0, +1.0, -1.0};

void require_convex(const Quadrilateral& quad) {
  if (!quad.is_convex()) throw Error(ErrorCode::not_convex, "Wachspress coordinates need a convex quadrilateral");
}

PointLocation locate_or_throw(const Quadrilateral& quad, Point2 p) {
  const PointLocation loc = classify_point_quad(quad, p);
  if (loc.kind == PointLocation::Kind::exterior) {
    throw Error(ErrorCode::out_of_domain,
                "point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") is outside the quadrilateral");
  }
  return loc;
}

void require_interior(const Quadrilateral& quad, Point2 p) {
  if (locate_or_throw(quad, p).kind != PointLocation::Kind::interior) {
    throw Error(ErrorCode::on_boundary, "closed-form weights are undefined on the boundary; use the system form");
  }
}

// Reproducing rows in coordinates centered at p and scaled by 1/diam, plus
// one regularizing row (already scaled); rhs = e_0.
BaryCoords solve_with_row(const Quadrilateral& quad, Point2 p, const std::array<double, 4>& row) {
  const double inv = 1.0 / quad.diameter();
  SquareSystem s(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2 rel = quad.vertex(static_cast<int>(i)) - p;
    s.a(0, i) = 1.0;
    s.a(1, i) = rel.x * inv;
    s.a(2, i) = rel.y * inv;
    s.a(3, i) = row[i];
  }
  s.b(0) = 1.0;
  return BaryCoords(solve_square(s));
}

BaryCoords normalized(std::array<double, 4> w) {
  const double total = w[0] + w[1] + w[2] + w[3];
  return BaryCoords({w[0] / total, w[1] / total, w[2] / total, w[3] / total});
}

}  // namespace

MomentRow moment_row(const Quadrilateral& quad, Point2 p) {
  MomentRow row;
  for (int i = 0; i < 4; ++i) {
    row.entries[static_cast<std::size_t>(i)] = kAlternating[static_cast<std::size_t>(i)] * distance(p, quad.vertex(i));
  }
  return row;
}

MomentRow wachspress_row(const Quadrilateral& quad, Point2 p) {
  require_convex(quad);
  std::array<double, 4> h{};
  for (int i = 0; i < 4; ++i) h[static_cast<std::size_t>(i)] = edge_distance(quad, i, p);
  MomentRow row;
  for (int i = 0; i < 4; ++i) {
    const auto prev = static_cast<std::size_t>((i + 3) % 4);
    const auto cur = static_cast<std::size_t>(i);
    const double l_prev = distance(quad.vertex(i), quad.vertex(i - 1));
    const double l_next = distance(quad.vertex(i), quad.vertex(i + 1));
    row.entries[cur] = kAlternating[cur] * l_prev * l_next * h[prev] * h[cur];
  }
  return row;
}

BaryCoords moment_coords_quad(const Quadrilateral& quad, Point2 p) {
  const PointLocation loc = locate_or_throw(quad, p);
  if (loc.kind == PointLocation::Kind::at_vertex) return BaryCoords::kronecker(4, static_cast<std::size_t>(loc.index));
  std::array<double, 4> row = moment_row(quad, p).entries;
  for (double& e : row) e /= quad.diameter();
  return solve_with_row(quad, p, row);
}

BaryCoords wachspress_coords_quad(const Quadrilateral& quad, Point2 p) {
  require_convex(quad);
  const PointLocation loc = locate_or_throw(quad, p);
  if (loc.kind == PointLocation::Kind::at_vertex) return BaryCoords::kronecker(4, static_cast<std::size_t>(loc.index));
  std::array<double, 4> row = wachspress_row(quad, p).entries;
  const double d2 = quad.diameter() * quad.diameter();
  for (double& e : row) e /= d2 * d2;
  return solve_with_row(quad, p, row);
}

BaryCoords mvc_oracle(const Quadrilateral& quad, Point2 p) {
  require_interior(quad, p);
  std::array<Point2, 4> s{};
  std::array<double, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    s[i] = quad.vertex(static_cast<int>(i)) - p;
    r[i] = norm(s[i]);
  }
  // tan(alpha_i / 2) = sin / (1 + cos), alpha_i the signed angle from s_i to s_{i+1}
  std::array<double, 4> tan_half{};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    tan_half[i] = cross(s[i], s[j]) / (r[i] * r[j] + dot(s[i], s[j]));
  }
  std::array<double, 4> w{};
  for (std::size_t i = 0; i < 4; ++i) w[i] = (tan_half[(i + 3) % 4] + tan_half[i]) / r[i];
  return normalized(w);
}

BaryCoords wachspress_oracle(const Quadrilateral& quad, Point2 p) {
  require_convex(quad);
  require_interior(quad, p);
  std::array<double, 4> w{};
  for (int i = 0; i < 4; ++i) {
    const Point2 prev = quad.vertex(i - 1);
    const Point2 cur = quad.vertex(i);
    const Point2 next = quad.vertex(i + 1);
    w[static_cast<std::size_t>(i)] = signed_area(prev, cur, next) / (signed_area(p, prev, cur) * signed_area(p, cur, next));
  }
  return normalized(w);
}

BaryCoords triangle_barycentric(const std::array<Point2, 3>& tri, Point2 p) {
  const auto& [a, b, c] = tri;
  const double scale = std::max({distance(a, b), distance(b, c), distance(c, a)});
  const double area = signed_area(a, b, c);
  if (!(std::abs(area) > 1e-13 * scale * scale)) {
    throw Error(ErrorCode::degenerate_triangle, "triangle area " + std::to_string(area));
  }
  return BaryCoords({signed_area(p, b, c) / area, signed_area(a, p, c) / area, signed_area(a, b, p) / area});
}

BaryCoords cramer_coords_quad(const Quadrilateral& quad, Point2 p) {
  locate_or_throw(quad, p);
  const MomentRow d = moment_row(quad, p);

  std::array<double, 4> area{};
  std::array<double, 4> d_dot_tau{};
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> others{};
    std::size_t n = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) others[n++] = j;
    }
    const std::array<Point2, 3> tri{quad.vertex(others[0]), quad.vertex(others[1]), quad.vertex(others[2])};
    const BaryCoords tau = triangle_barycentric(tri, p);
    double s = 0.0;
    for (std::size_t k = 0; k < 3; ++k) s += d.entries[static_cast<std::size_t>(others[k])] * tau[k];
    area[static_cast<std::size_t>(i)] = signed_area(tri[0], tri[1], tri[2]);
    d_dot_tau[static_cast<std::size_t>(i)] = s;
  }

  // nu = (A1, -A2, A3, -A4) spans the kernel of [1; V]
  double d_dot_nu = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d_dot_nu += d.entries[i] * kAlternating[i] * area[i];

  std::vector<double> phi(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const double sign = i % 2 == 0 ? -1.0 : 1.0;  // (-1)^i for 1-based i
    phi[i] = sign * area[i] * d_dot_tau[i] / d_dot_nu;
  }
  return BaryCoords(std::move(phi));
}

}  // namespace mcoords
