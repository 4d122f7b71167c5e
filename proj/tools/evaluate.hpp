// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geometry_spec.hpp"
#include "mcoords/bary.hpp"
#include "mcoords/coords3d.hpp"

namespace mcoords::cli {

enum class Method { moment, wachspress, mvc_oracle, wachspress_oracle, cramer, hat };

std::string_view to_string(Method m) noexcept;

/// Throws InputError for unknown names.
Method parse_method(std::string_view name);

/// Throws InputError if the method does not apply to this kind of geometry,
/// Error(not_convex) for Wachspress on a nonconvex quadrilateral.
void require_compatible(const GeometrySpec& geometry, Method method);

struct PointResult {
  /// In the caller's vertex order (clockwise quad input is mapped back).
  BaryCoords coords;
  std::optional<Frame3> frame;
};

/// Throws mcoords::Error for domain failures.
PointResult evaluate_point(const GeometrySpec& geometry, Method method, std::span<const double> point);

/// Vertices (or nodes) in the caller's order, padded to three components.
std::vector<Point3> input_vertices(const GeometrySpec& geometry);

/// Worst violations of partition of unity, nonnegativity and linear precision
/// (the last divided by the diameter).
struct InvariantReport {
  double sum_error = 0.0;
  double min_weight = 0.0;
  double precision_error = 0.0;
};

InvariantReport check_invariants(const GeometrySpec& geometry, std::span<const double> point, const BaryCoords& coords);

struct InvariantTolerance {
  double sum = 1e-12;
  double negative = 1e-12;
  double precision = 1e-10;
};

bool satisfies(const InvariantReport& r, const InvariantTolerance& tol);

/// Inside or on the boundary (default classification tolerance).
bool in_domain(const GeometrySpec& geometry, std::span<const double> point);

}  // namespace mcoords::cli
