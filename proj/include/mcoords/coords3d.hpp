// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <array>
#include <string_view>

#include "mcoords/bary.hpp"
#include "mcoords/geometry.hpp"

namespace mcoords {

enum class FrameKind {
  identity,
  bisector,
  separating_plane,
  /// identity axes used for points on the boundary (no sign-pattern check)
  boundary,
};

std::string_view to_string(FrameKind kind) noexcept;

/// Unit (not necessarily orthogonal) reference axes at a point.
/// Local coordinates w of a vector v solve [r1 r2 r3] w = v.
class Frame3 {
 public:
  /// Normalizes the axes; throws Error(frame_not_found) if |det| < 1e-8.
  Frame3(const std::array<Point3, 3>& axes, Point3 origin, FrameKind kind);

  static Frame3 identity(Point3 origin, FrameKind kind = FrameKind::identity);

  const std::array<Point3, 3>& axes() const noexcept { return axes_; }
  Point3 origin() const noexcept { return origin_; }
  FrameKind kind() const noexcept { return kind_; }
  double determinant() const noexcept { return det_; }

  Point3 to_local(Point3 v) const;

 private:
  std::array<Point3, 3> axes_;
  std::array<Point3, 3> dual_;  // rows of the inverse
  Point3 origin_;
  FrameKind kind_;
  double det_ = 0.0;
};

/// w_i = R^{-1} (v_i - p)
using FrameCoords = std::array<Point3, 8>;

FrameCoords frame_coordinates(const Hexahedron& hex, Point3 p, const Frame3& frame);

/// Signed partial distances; row r uses the two frame axes other than r.
struct PartialDistanceMatrix {
  std::array<std::array<double, 8>, 3> entries{};
};

inline constexpr std::array<std::array<int, 8>, 3> kPartialDistanceSigns{{
    {+1, -1, +1, -1, +1, -1, +1, -1},
    {+1, -1, -1, +1, -1, +1, +1, -1},
    {+1, +1, -1, -1, -1, -1, +1, +1},
}};

inline constexpr std::array<int, 8> kDistanceSigns{+1, -1, +1, -1, -1, +1, -1, +1};

/// Columns of the face containing p (if any) are zero.
PartialDistanceMatrix partial_distance_matrix(const Hexahedron& hex, Point3 p, const Frame3& frame);

/// (d1, -d2, d3, -d4, -d5, d6, -d7, d8) with d_i = |w_i|.
std::array<double, 8> distance_row_3d(const Hexahedron& hex, Point3 p, const Frame3& frame);

/// True iff every w_i component exceeds zero_tol in magnitude with the sign of kHexSignPattern.
bool sign_pattern_ok(const FrameCoords& w, double zero_tol);

/// Interior points: identity, then opposite-face bisectors, then the
/// separating planes through p and the intersection line of each face pair;
/// first frame passing sign_pattern_ok wins. Points on the boundary get the
/// boundary (identity) frame. Throws Error(frame_not_found) if nothing passes.
Frame3 reference_frame(const Hexahedron& hex, Point3 p);

struct HexEvaluation {
  BaryCoords coords;
  Frame3 frame;
  PointLocation location;
};

/// Solves [1; W; Delta(p); d(p)] phi = [1; 0; 0; 0] in the reference frame.
/// Throws Error(out_of_domain) for exterior points.
HexEvaluation evaluate_hex(const Hexahedron& hex, Point3 p);

BaryCoords moment_coords_hex(const Hexahedron& hex, Point3 p);

}  // namespace mcoords
