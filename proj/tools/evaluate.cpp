// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "evaluate.hpp"

#include <cmath>

#include "mcoords/coords1d.hpp"
#include "mcoords/coords2d.hpp"
#include "mcoords/error.hpp"

namespace mcoords::cli {

namespace {

BaryCoords to_input_order(const Quadrilateral& quad, const BaryCoords& stored) {
  if (!quad.reversed()) return stored;
  std::vector<double> w(4);
  for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] = stored[static_cast<std::size_t>(quad.stored_index(i))];
  return BaryCoords(std::move(w));
}

void require_dimension(const GeometrySpec& geometry, std::span<const double> point) {
  if (point.size() != static_cast<std::size_t>(geometry.dimension())) {
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, geometry '" + geometry.name +
                     "' needs " + std::to_string(geometry.dimension()));
  }
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::moment: return "moment";
    case Method::wachspress: return "wachspress";
    case Method::mvc_oracle: return "mvc-oracle";
    case Method::wachspress_oracle: return "wachspress-oracle";
    case Method::cramer: return "cramer";
    case Method::hat: return "hat";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::moment, Method::wachspress, Method::mvc_oracle, Method::wachspress_oracle, Method::cramer,
                   Method::hat}) {
    if (to_string(m) == name) return m;
  }
  throw InputError("unknown method '" + std::string(name) + "'");
}

void require_compatible(const GeometrySpec& geometry, Method method) {
  bool ok = false;
  switch (geometry.kind) {
    case GeometryKind::interval: ok = method == Method::moment || method == Method::hat; break;
    case GeometryKind::quad: ok = method != Method::hat; break;
    case GeometryKind::hex: ok = method == Method::moment; break;
  }
  if (!ok) {
    throw InputError("method '" + std::string(to_string(method)) + "' does not apply to " +
                     std::string(to_string(geometry.kind)) + " geometry");
  }
  if ((method == Method::wachspress || method == Method::wachspress_oracle) && !geometry.quad().is_convex()) {
    throw Error(ErrorCode::not_convex, "Wachspress coordinates are not valid on the nonconvex quadrilateral '" +
                                           geometry.name + "'");
  }
}

PointResult evaluate_point(const GeometrySpec& geometry, Method method, std::span<const double> point) {
  require_dimension(geometry, point);
  switch (geometry.kind) {
    case GeometryKind::interval: {
      const double x = point[0];
      return {method == Method::hat ? hat_oracle(geometry.nodes(), x) : moment_coords_1d(geometry.nodes(), x), {}};
    }
    case GeometryKind::quad: {
      const Quadrilateral& q = geometry.quad();
      const Point2 p{point[0], point[1]};
      BaryCoords c;
      switch (method) {
        case Method::moment: c = moment_coords_quad(q, p); break;
        case Method::wachspress: c = wachspress_coords_quad(q, p); break;
        case Method::mvc_oracle: c = mvc_oracle(q, p); break;
        case Method::wachspress_oracle: c = wachspress_oracle(q, p); break;
        case Method::cramer: c = cramer_coords_quad(q, p); break;
        case Method::hat: break;
      }
      return {to_input_order(q, c), {}};
    }
    case GeometryKind::hex: {
      HexEvaluation e = evaluate_hex(geometry.hex(), {point[0], point[1], point[2]});
      return {std::move(e.coords), e.frame};
    }
  }
  throw InputError("unsupported geometry");
}

std::vector<Point3> input_vertices(const GeometrySpec& geometry) {
  std::vector<Point3> out;
  switch (geometry.kind) {
    case GeometryKind::interval:
      for (double x : geometry.nodes().nodes()) out.push_back({x, 0.0, 0.0});
      break;
    case GeometryKind::quad: {
      const Quadrilateral& q = geometry.quad();
      for (int i = 0; i < 4; ++i) {
        const Point2 v = q.vertex(q.stored_index(i));
        out.push_back({v.x, v.y, 0.0});
      }
      break;
    }
    case GeometryKind::hex:
      for (const Point3& v : geometry.hex().vertices()) out.push_back(v);
      break;
  }
  return out;
}

InvariantReport check_invariants(const GeometrySpec& geometry, std::span<const double> point, const BaryCoords& coords) {
  const std::vector<Point3> v = input_vertices(geometry);
  InvariantReport r;
  r.sum_error = std::abs(coords.sum() - 1.0);
  r.min_weight = coords.min();
  Point3 reproduced{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < coords.size(); ++i) reproduced = reproduced + coords[i] * v[i];
  double err = 0.0;
  for (std::size_t k = 0; k < point.size(); ++k) err = std::max(err, std::abs(reproduced[static_cast<int>(k)] - point[k]));
  r.precision_error = err / geometry.diameter();
  return r;
}

bool satisfies(const InvariantReport& r, const InvariantTolerance& tol) {
  return r.sum_error <= tol.sum && r.min_weight >= -tol.negative && r.precision_error <= tol.precision;
}

bool in_domain(const GeometrySpec& geometry, std::span<const double> point) {
  switch (geometry.kind) {
    case GeometryKind::interval: {
      const auto n = geometry.nodes().nodes();
      const double slack = 1e-12 * geometry.diameter();
      return point[0] >= n.front() - slack && point[0] <= n.back() + slack;
    }
    case GeometryKind::quad:
      return classify_point_quad(geometry.quad(), {point[0], point[1]}).inside_or_boundary();
    case GeometryKind::hex:
      return face_of_point_hex(geometry.hex(), {point[0], point[1], point[2]}).inside_or_boundary();
  }
  return false;
}

}  // namespace mcoords::cli
