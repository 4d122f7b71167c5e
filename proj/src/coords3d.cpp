// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/coords3d.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "mcoords/error.hpp"
#include "mcoords/smallsolve.hpp"

namespace mcoords {

namespace {

constexpr double kMinFrameDet = 1e-8;
constexpr double kSignZeroTol = 1e-12;  // relative to diameter

Point3 unit(Point3 v) { return (1.0 / norm(v)) * v; }

// Frame whose local coordinates are positive multiples of the given
// functionals: axes are the normalized columns of the inverse of the matrix
// with rows m0, m1, m2.
std::optional<Frame3> frame_from_functionals(const std::array<Point3, 3>& m, Point3 origin, FrameKind kind) {
  const double det = dot(m[0], cross(m[1], m[2]));
  if (!(std::abs(det) > kMinFrameDet)) return std::nullopt;
  const std::array<Point3, 3> columns{(1.0 / det) * cross(m[1], m[2]), (1.0 / det) * cross(m[2], m[0]),
                                      (1.0 / det) * cross(m[0], m[1])};
  try {
    return Frame3(columns, origin, kind);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string describe(const FrameCoords& w) {
  std::ostringstream os;
  os.precision(6);
  for (int r = 0; r < 3; ++r) {
    os << (r == 0 ? "[" : "; ");
    for (int i = 0; i < 8; ++i) os << (i ? " " : "") << w[static_cast<std::size_t>(i)][r];
  }
  os << "]";
  return os.str();
}

int face_for_columns(const Hexahedron& hex, const PointLocation& loc) {
  if (loc.kind == PointLocation::Kind::on_face) return loc.index;
  if (loc.kind == PointLocation::Kind::at_vertex) {
    for (int j = 0; j < 6; ++j) {
      if (hex.face_contains_vertex(j, loc.index)) return j;
    }
  }
  return -1;
}

PartialDistanceMatrix partial_distances(const FrameCoords& w, int zero_face) {
  PartialDistanceMatrix out;
  for (std::size_t i = 0; i < 8; ++i) {
    const Point3 v = w[i];
    const std::array<double, 3> partial{std::hypot(v.y, v.z), std::hypot(v.x, v.z), std::hypot(v.x, v.y)};
    for (std::size_t r = 0; r < 3; ++r) out.entries[r][i] = kPartialDistanceSigns[r][i] * partial[r];
  }
  if (zero_face >= 0) {
    for (int i : kHexFaces[static_cast<std::size_t>(zero_face)]) {
      for (auto& row : out.entries) row[static_cast<std::size_t>(i)] = 0.0;
    }
  }
  return out;
}

std::array<double, 8> distances(const FrameCoords& w) {
  std::array<double, 8> d{};
  for (std::size_t i = 0; i < 8; ++i) d[i] = kDistanceSigns[i] * norm(w[i]);
  return d;
}

Frame3 interior_frame(const Hexahedron& hex, Point3 p) {
  const double zero_tol = kSignZeroTol * hex.diameter();
  FrameCoords last{};

  auto accept = [&](const Frame3& frame) {
    last = frame_coordinates(hex, p, frame);
    return sign_pattern_ok(last, zero_tol);
  };

  const Frame3 id = Frame3::identity(p);
  if (accept(id)) return id;

  std::array<Point3, 3> bisectors{};
  for (std::size_t k = 0; k < 3; ++k) {
    bisectors[k] = hex.face_plane(static_cast<int>(2 * k)).normal - hex.face_plane(static_cast<int>(2 * k + 1)).normal;
    bisectors[k] = unit(bisectors[k]);
  }
  if (auto frame = frame_from_functionals(bisectors, p, FrameKind::bisector); frame && accept(*frame)) return *frame;

  // Plane through p and the line where the supporting planes of the pair meet
  // (the parallel plane through p if they do not meet). Its normal
  // h_b n_a - h_a n_b is positive on face a, negative on face b.
  std::array<Point3, 3> separating{};
  for (std::size_t k = 0; k < 3; ++k) {
    const Plane& a = hex.face_plane(static_cast<int>(2 * k));
    const Plane& b = hex.face_plane(static_cast<int>(2 * k + 1));
    separating[k] = unit(b.height(p) * a.normal - a.height(p) * b.normal);
  }
  if (auto frame = frame_from_functionals(separating, p, FrameKind::separating_plane); frame && accept(*frame)) {
    return *frame;
  }

  throw Error(ErrorCode::frame_not_found, "no reference frame gives the hexahedral sign pattern; last local coordinates " +
                                              describe(last));
}

}  // namespace

std::string_view to_string(FrameKind kind) noexcept {
  switch (kind) {
    case FrameKind::identity: return "identity";
    case FrameKind::bisector: return "bisector";
    case FrameKind::separating_plane: return "separating-plane";
    case FrameKind::boundary: return "boundary";
  }
  return "unknown";
}

Frame3::Frame3(const std::array<Point3, 3>& axes, Point3 origin, FrameKind kind) : origin_(origin), kind_(kind) {
  for (std::size_t j = 0; j < 3; ++j) {
    const double len = norm(axes[j]);
    if (!(len > 0.0)) throw Error(ErrorCode::frame_not_found, "zero frame axis");
    axes_[j] = (1.0 / len) * axes[j];
  }
  det_ = dot(axes_[0], cross(axes_[1], axes_[2]));
  if (!(std::abs(det_) >= kMinFrameDet)) {
    throw Error(ErrorCode::frame_not_found, "frame axes are nearly dependent (det " + std::to_string(det_) + ")");
  }
  dual_ = {(1.0 / det_) * cross(axes_[1], axes_[2]), (1.0 / det_) * cross(axes_[2], axes_[0]),
           (1.0 / det_) * cross(axes_[0], axes_[1])};
}

Frame3 Frame3::identity(Point3 origin, FrameKind kind) {
  return Frame3({Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}, origin, kind);
}

Point3 Frame3::to_local(Point3 v) const { return {dot(dual_[0], v), dot(dual_[1], v), dot(dual_[2], v)}; }

FrameCoords frame_coordinates(const Hexahedron& hex, Point3 p, const Frame3& frame) {
  FrameCoords w{};
  for (int i = 0; i < 8; ++i) w[static_cast<std::size_t>(i)] = frame.to_local(hex.vertex(i) - p);
  return w;
}

PartialDistanceMatrix partial_distance_matrix(const Hexahedron& hex, Point3 p, const Frame3& frame) {
  return partial_distances(frame_coordinates(hex, p, frame), face_for_columns(hex, face_of_point_hex(hex, p)));
}

std::array<double, 8> distance_row_3d(const Hexahedron& hex, Point3 p, const Frame3& frame) {
  return distances(frame_coordinates(hex, p, frame));
}

bool sign_pattern_ok(const FrameCoords& w, double zero_tol) {
  for (std::size_t i = 0; i < 8; ++i) {
    for (int r = 0; r < 3; ++r) {
      const double v = w[i][r];
      if (!(std::abs(v) > zero_tol)) return false;
      if ((v > 0.0 ? 1 : -1) != kHexSignPattern[static_cast<std::size_t>(r)][i]) return false;
    }
  }
  return true;
}

Frame3 reference_frame(const Hexahedron& hex, Point3 p) {
  const PointLocation loc = face_of_point_hex(hex, p);
  if (loc.kind == PointLocation::Kind::exterior) throw Error(ErrorCode::out_of_domain, "point is outside the hexahedron");
  if (loc.kind != PointLocation::Kind::interior) return Frame3::identity(p, FrameKind::boundary);
  return interior_frame(hex, p);
}

HexEvaluation evaluate_hex(const Hexahedron& hex, Point3 p) {
  const PointLocation loc = face_of_point_hex(hex, p);
  if (loc.kind == PointLocation::Kind::exterior) throw Error(ErrorCode::out_of_domain, "point is outside the hexahedron");
  if (loc.kind == PointLocation::Kind::at_vertex) {
    return {BaryCoords::kronecker(8, static_cast<std::size_t>(loc.index)), Frame3::identity(p, FrameKind::boundary), loc};
  }

  const Frame3 frame =
      loc.kind == PointLocation::Kind::interior ? interior_frame(hex, p) : Frame3::identity(p, FrameKind::boundary);
  const FrameCoords w = frame_coordinates(hex, p, frame);
  const PartialDistanceMatrix delta = partial_distances(w, face_for_columns(hex, loc));
  const std::array<double, 8> d = distances(w);

  const double inv = 1.0 / hex.diameter();
  SquareSystem s(8);
  for (std::size_t i = 0; i < 8; ++i) {
    s.a(0, i) = 1.0;
    for (std::size_t r = 0; r < 3; ++r) {
      s.a(1 + r, i) = w[i][static_cast<int>(r)] * inv;
      s.a(4 + r, i) = delta.entries[r][i] * inv;
    }
    s.a(7, i) = d[i] * inv;
  }
  s.b(0) = 1.0;
  return {BaryCoords(solve_square(s)), frame, loc};
}

BaryCoords moment_coords_hex(const Hexahedron& hex, Point3 p) { return evaluate_hex(hex, p).coords; }

}  // namespace mcoords
