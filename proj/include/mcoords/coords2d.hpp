// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <array>

#include "mcoords/bary.hpp"
#include "mcoords/geometry.hpp"

namespace mcoords {

/// Regularizing row with sign pattern (+, -, +, -).
struct MomentRow {
  std::array<double, 4> entries{};
};

/// (d1, -d2, d3, -d4) with d_i = |p - v_i|.
MomentRow moment_row(const Quadrilateral& quad, Point2 p);

/// (rho1, -rho2, rho3, -rho4), rho_i = l_{i,i-1} l_{i,i+1} h_{i-1}(p) h_i(p).
/// Throws Error(not_convex) on nonconvex quads.
MomentRow wachspress_row(const Quadrilateral& quad, Point2 p);

/// Unique solution of [1; V; d(p)] phi = [1; p; 0]. Identical to mean value
/// coordinates and valid on the closed quad, convex or not.
/// Throws Error(out_of_domain) for exterior points.
BaryCoords moment_coords_quad(const Quadrilateral& quad, Point2 p);

/// Unique solution of [V; 1; rho(p)] phi = [p; 1; 0] on a convex quad.
BaryCoords wachspress_coords_quad(const Quadrilateral& quad, Point2 p);

/// Floater's tangent half-angle formula. Interior points only
/// (Error(on_boundary) otherwise).
BaryCoords mvc_oracle(const Quadrilateral& quad, Point2 p);

/// w_i = A(v_{i-1}, v_i, v_{i+1}) / (A(p, v_{i-1}, v_i) A(p, v_i, v_{i+1})), normalized.
/// Convex quads, interior points only.
BaryCoords wachspress_oracle(const Quadrilateral& quad, Point2 p);

/// Signed affine coordinates of p in a triangle.
/// Throws Error(degenerate_triangle) if |area| <= 1e-13 * scale^2.
BaryCoords triangle_barycentric(const std::array<Point2, 3>& tri, Point2 p);

/// Closed form of the moment coordinates from Cramer's rule:
///   phi_i = (-1)^i A_i (d . tau^i) / (d . nu),  i = 1..4,
/// with tau^i the triangle coordinates leaving vertex i out (zero at slot i),
/// A_i the signed area of that triangle and nu = (A1, -A2, A3, -A4).
BaryCoords cramer_coords_quad(const Quadrilateral& quad, Point2 p);

}  // namespace mcoords
