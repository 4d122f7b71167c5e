// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mcoords/vec.hpp"

namespace mcoords {

/// Result of validate_geometry. An empty violation list means the input is usable.
struct ValidationReport {
  std::vector<std::string> violations;
  bool convex = false;

  bool ok() const noexcept { return violations.empty(); }
};

/// Where a query point sits relative to a cell.
///
/// `index` is the vertex, edge, or face index for the AtVertex/OnEdge/OnFace
/// tags (zero-based); `t` is the edge parameter measured from vertex `index`
/// toward vertex `index + 1`.
struct PointLocation {
  enum class Kind { interior, on_edge, on_face, at_vertex, exterior };

  Kind kind = Kind::exterior;
  int index = -1;
  double t = 0.0;

  static PointLocation interior() { return {Kind::interior, -1, 0.0}; }
  static PointLocation exterior() { return {Kind::exterior, -1, 0.0}; }
  static PointLocation at_vertex(int i) { return {Kind::at_vertex, i, 0.0}; }
  static PointLocation on_edge(int i, double t) { return {Kind::on_edge, i, t}; }
  static PointLocation on_face(int j) { return {Kind::on_face, j, 0.0}; }

  bool inside_or_boundary() const noexcept { return kind != Kind::exterior; }
};

// --- planar ---------------------------------------------------------------

/// Half the determinant of [[a1,b1,c1],[a2,b2,c2],[1,1,1]]; positive for CCW triangles.
double signed_area(Point2 a, Point2 b, Point2 c);

/// Four vertices in cyclic order, stored counterclockwise.
///
/// Clockwise input is reversed to (v1, v4, v3, v2) at construction, which
/// keeps v1 in slot 0; `reversed()` reports whether that happened so callers
/// can map coordinates back to their own labelling.
class Quadrilateral {
 public:
  /// Throws Error(invalid_geometry) listing every violation.
  explicit Quadrilateral(const std::array<Point2, 4>& vertices);

  /// Cyclic access: vertex(-1) == vertex(3), vertex(4) == vertex(0).
  Point2 vertex(int i) const { return vertices_[static_cast<std::size_t>(((i % 4) + 4) % 4)]; }
  const std::array<Point2, 4>& vertices() const noexcept { return vertices_; }

  double diameter() const noexcept { return diameter_; }
  bool is_convex() const noexcept { return convex_; }
  bool reversed() const noexcept { return reversed_; }

  /// Slot of input vertex `i` in the stored (CCW) order.
  int stored_index(int input_index) const noexcept {
    return reversed_ ? (4 - input_index) % 4 : input_index;
  }

  /// Total signed area (always > 0 after normalization).
  double area() const;

 private:
  std::array<Point2, 4> vertices_;
  double diameter_ = 0.0;
  bool convex_ = false;
  bool reversed_ = false;
};

ValidationReport validate_quad(std::span<const Point2> vertices);

/// Distance from p to the supporting line of edge v_i v_{i+1}, positive on the interior side.
/// Throws Error(degenerate_edge) for edges shorter than 1e-13.
double edge_distance(const Quadrilateral& quad, int i, Point2 p);

/// Unit outer normal of edge v_i v_{i+1}.
Point2 outward_normal(const Quadrilateral& quad, int i);

/// Default tolerance is 1e-10 times the diameter.
PointLocation classify_point_quad(const Quadrilateral& quad, Point2 p);
PointLocation classify_point_quad(const Quadrilateral& quad, Point2 p, double tol);

// --- hexahedra --------------------------------------------------------------

/// Face connectivity of the eight-node hexahedron. Faces 2k and 2k+1 are
/// opposite; pair k separates the vertices by the sign in row k of the
/// reference sign pattern
///   row 0: + + + + - - - -
///   row 1: + + - - + + - -
///   row 2: + - - + + - - +
inline constexpr std::array<std::array<int, 4>, 6> kHexFaces{{
    {0, 1, 2, 3},
    {4, 5, 6, 7},
    {0, 1, 5, 4},
    {3, 2, 6, 7},
    {0, 3, 7, 4},
    {1, 2, 6, 5},
}};

inline constexpr std::array<std::array<int, 8>, 3> kHexSignPattern{{
    {+1, +1, +1, +1, -1, -1, -1, -1},
    {+1, +1, -1, -1, +1, +1, -1, -1},
    {+1, -1, -1, +1, +1, -1, -1, +1},
}};

/// Supporting plane with outward unit normal: points x with dot(normal, x) == offset.
struct Plane {
  Point3 normal;
  double offset = 0.0;

  /// Distance to the plane, positive on the inner side.
  double height(Point3 p) const { return offset - dot(normal, p); }
};

/// Orthonormal chart of a face plane: origin plus two in-plane unit axes.
struct FaceChart {
  Point3 origin;
  Point3 e1;
  Point3 e2;

  Point2 to_chart(Point3 x) const { return {dot(x - origin, e1), dot(x - origin, e2)}; }
};

/// Convex hexahedron with planar faces; vertex order follows kHexFaces.
class Hexahedron {
 public:
  /// Throws Error(invalid_geometry) listing every violation.
  explicit Hexahedron(const std::array<Point3, 8>& vertices);

  Point3 vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const std::array<Point3, 8>& vertices() const noexcept { return vertices_; }

  double diameter() const noexcept { return diameter_; }
  const Plane& face_plane(int j) const { return planes_[static_cast<std::size_t>(j)]; }
  FaceChart face_chart(int j) const;
  Point3 centroid() const;

  bool face_contains_vertex(int face, int vertex) const;

 private:
  std::array<Point3, 8> vertices_;
  std::array<Plane, 6> planes_;
  double diameter_ = 0.0;
};

ValidationReport validate_hex(std::span<const Point3> vertices);

/// Face j drawn in its orthonormal chart (face_chart(j)), vertices in
/// kHexFaces order before orientation normalization.
Quadrilateral face_quadrilateral(const Hexahedron& hex, int face);

/// AtVertex within tol of a vertex; OnFace(j) for the lowest-index face whose
/// plane is within tol and whose quadrilateral contains the projection;
/// Interior when strictly inside all six planes; Exterior otherwise.
PointLocation face_of_point_hex(const Hexahedron& hex, Point3 p);
PointLocation face_of_point_hex(const Hexahedron& hex, Point3 p, double tol);

// --- 1D -------------------------------------------------------------------

/// At least three strictly increasing nodes.
class NodeSet1D {
 public:
  explicit NodeSet1D(std::vector<double> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double length() const noexcept { return nodes_.back() - nodes_.front(); }

 private:
  std::vector<double> nodes_;
};

ValidationReport validate_nodes(std::span<const double> nodes);

}  // namespace mcoords
