// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "mcoords/error.hpp"

namespace mcoords {

namespace {

constexpr double kCoincidentTol = 1e-12;  // relative to diameter
constexpr double kAreaTol = 1e-12;        // relative to diameter^2
constexpr double kPlanarTol = 1e-9;       // relative to diameter
constexpr double kClassifyTol = 1e-10;    // relative to diameter

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

template <class P>
double diameter_of(std::span<const P> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
  }
  return d;
}

int orientation(Point2 a, Point2 b, Point2 c, double tol) {
  const double s = signed_area(a, b, c);
  return s > tol ? 1 : (s < -tol ? -1 : 0);
}

bool on_segment(Point2 a, Point2 b, Point2 p, double tol) {
  const Point2 e = b - a;
  const double len2 = dot(e, e);
  const double t = len2 > 0.0 ? std::clamp(dot(p - a, e) / len2, 0.0, 1.0) : 0.0;
  return distance(a + t * e, p) <= tol;
}

// Closed segments ab and cd share a point (within tolerance).
bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d, double area_tol, double len_tol) {
  const int o1 = orientation(a, b, c, area_tol);
  const int o2 = orientation(a, b, d, area_tol);
  const int o3 = orientation(c, d, a, area_tol);
  const int o4 = orientation(c, d, b, area_tol);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c, len_tol) || on_segment(a, b, d, len_tol) ||
         on_segment(c, d, a, len_tol) || on_segment(c, d, b, len_tol);
}

double polygon_area(std::span<const Point2> v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

Point3 normalized(Point3 v) { return (1.0 / norm(v)) * v; }

// Newell normal of a planar quad, outward with respect to `inside`.
Plane face_plane_of(const std::array<Point3, 4>& f, Point3 inside) {
  Point3 n = cross(f[2] - f[0], f[3] - f[1]);
  const double len = norm(n);
  if (len == 0.0) return {{0.0, 0.0, 0.0}, 0.0};
  n = (1.0 / len) * n;
  const Point3 c = 0.25 * (f[0] + f[1] + f[2] + f[3]);
  if (dot(n, inside - c) > 0.0) n = -1.0 * n;
  return {n, dot(n, c)};
}

std::array<Point3, 4> face_vertices(std::span<const Point3> v, int j) {
  const auto& f = kHexFaces[static_cast<std::size_t>(j)];
  return {v[f[0]], v[f[1]], v[f[2]], v[f[3]]};
}

FaceChart chart_of(const std::array<Point3, 4>& f, const Plane& plane) {
  const Point3 e1 = normalized(f[1] - f[0]);
  const Point3 e2 = normalized(cross(plane.normal, e1));
  return {f[0], e1, e2};
}

}  // namespace

double signed_area(Point2 a, Point2 b, Point2 c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// --- Quadrilateral ----------------------------------------------------------

ValidationReport validate_quad(std::span<const Point2> v) {
  ValidationReport report;
  if (v.size() != 4) {
    report.violations.push_back("quadrilateral needs 4 vertices, got " + std::to_string(v.size()));
    return report;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!std::isfinite(v[i].x) || !std::isfinite(v[i].y)) {
      report.violations.push_back("vertex " + std::to_string(i + 1) + " is not finite");
    }
  }
  if (!report.ok()) return report;

  const double diam = diameter_of(v);
  if (diam == 0.0) {
    report.violations.push_back("all vertices coincide");
    return report;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (distance(v[i], v[j]) <= kCoincidentTol * diam) {
        report.violations.push_back("vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " coincide");
      }
    }
  }
  if (!report.ok()) return report;

  const double area_tol = kAreaTol * diam * diam;
  const double len_tol = kCoincidentTol * diam;
  if (segments_touch(v[0], v[1], v[2], v[3], area_tol, len_tol)) {
    report.violations.push_back("edges v1v2 and v3v4 intersect (not simple)");
  }
  if (segments_touch(v[1], v[2], v[3], v[0], area_tol, len_tol)) {
    report.violations.push_back("edges v2v3 and v4v1 intersect (not simple)");
  }
  const double area = polygon_area(v);
  if (std::abs(area) <= area_tol) report.violations.push_back("quadrilateral has zero area");
  if (!report.ok()) return report;

  const double orient = area > 0.0 ? 1.0 : -1.0;
  report.convex = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const double corner = orient * signed_area(v[(i + 3) % 4], v[i], v[(i + 1) % 4]);
    if (corner <= area_tol) report.convex = false;
  }
  return report;
}

Quadrilateral::Quadrilateral(const std::array<Point2, 4>& vertices) : vertices_(vertices) {
  const ValidationReport report = validate_quad(vertices_);
  if (!report.ok()) throw Error(ErrorCode::invalid_geometry, join(report.violations));
  if (polygon_area(vertices_) < 0.0) {
    std::swap(vertices_[1], vertices_[3]);
    reversed_ = true;
  }
  diameter_ = diameter_of<Point2>(vertices_);
  convex_ = report.convex;
}

double Quadrilateral::area() const { return polygon_area(vertices_); }

double edge_distance(const Quadrilateral& quad, int i, Point2 p) {
  const Point2 a = quad.vertex(i);
  const Point2 e = quad.vertex(i + 1) - a;
  const double len = norm(e);
  if (len < 1e-13) throw Error(ErrorCode::degenerate_edge, "edge " + std::to_string(i + 1));
  return cross(e, p - a) / len;
}

Point2 outward_normal(const Quadrilateral& quad, int i) {
  const Point2 e = quad.vertex(i + 1) - quad.vertex(i);
  const double len = norm(e);
  if (len < 1e-13) throw Error(ErrorCode::degenerate_edge, "edge " + std::to_string(i + 1));
  return {e.y / len, -e.x / len};
}

PointLocation classify_point_quad(const Quadrilateral& quad, Point2 p) {
  return classify_point_quad(quad, p, kClassifyTol * quad.diameter());
}

PointLocation classify_point_quad(const Quadrilateral& quad, Point2 p, double tol) {
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const double d = distance(quad.vertex(i), p);
    if (d <= tol && d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  if (best >= 0) return PointLocation::at_vertex(best);

  double best_t = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Point2 a = quad.vertex(i);
    const Point2 e = quad.vertex(i + 1) - a;
    const double t = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
    const double d = distance(a + t * e, p);
    if (d <= tol && d < best_dist) {
      best = i;
      best_dist = d;
      best_t = t;
    }
  }
  if (best >= 0) return PointLocation::on_edge(best, best_t);

  // even-odd ray crossing toward +x
  bool inside = false;
  for (int i = 0; i < 4; ++i) {
    const Point2 a = quad.vertex(i);
    const Point2 b = quad.vertex(i + 1);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? PointLocation::interior() : PointLocation::exterior();
}

// --- Hexahedron ---------------------------------------------------------------

ValidationReport validate_hex(std::span<const Point3> v) {
  ValidationReport report;
  if (v.size() != 8) {
    report.violations.push_back("hexahedron needs 8 vertices, got " + std::to_string(v.size()));
    return report;
  }
  for (std::size_t i = 0; i < 8; ++i) {
    if (!std::isfinite(v[i].x) || !std::isfinite(v[i].y) || !std::isfinite(v[i].z)) {
      report.violations.push_back("vertex " + std::to_string(i + 1) + " is not finite");
    }
  }
  if (!report.ok()) return report;

  const double diam = diameter_of(v);
  if (diam == 0.0) {
    report.violations.push_back("all vertices coincide");
    return report;
  }
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      if (distance(v[i], v[j]) <= kCoincidentTol * diam) {
        report.violations.push_back("vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " coincide");
      }
    }
  }
  if (!report.ok()) return report;

  Point3 centroid{};
  for (const auto& p : v) centroid = centroid + 0.125 * p;
  const double tol = kPlanarTol * diam;

  bool convex = true;
  for (int j = 0; j < 6; ++j) {
    const auto f = face_vertices(v, j);
    const std::string face_name = "face " + std::to_string(j + 1);
    const Plane plane = face_plane_of(f, centroid);
    if (norm(plane.normal) == 0.0) {
      report.violations.push_back(face_name + " is degenerate");
      convex = false;
      continue;
    }
    for (int k = 0; k < 4; ++k) {
      const double off = std::abs(plane.height(f[static_cast<std::size_t>(k)]));
      if (off > tol) {
        std::ostringstream msg;
        msg << face_name << " is not planar: vertex " << kHexFaces[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] + 1
            << " is " << off << " off the face plane";
        report.violations.push_back(msg.str());
      }
    }
    for (int k = 0; k < 8; ++k) {
      const auto& face = kHexFaces[static_cast<std::size_t>(j)];
      if (std::find(face.begin(), face.end(), k) != face.end()) continue;
      const double h = plane.height(v[static_cast<std::size_t>(k)]);
      if (h < -tol) {
        report.violations.push_back("not convex: vertex " + std::to_string(k + 1) + " is outside the plane of " +
                                    face_name);
        convex = false;
      } else if (h <= tol) {
        report.violations.push_back("degenerate: vertex " + std::to_string(k + 1) + " lies in the plane of " +
                                    face_name);
        convex = false;
      }
    }
    const FaceChart chart = chart_of(f, plane);
    const std::array<Point2, 4> flat{chart.to_chart(f[0]), chart.to_chart(f[1]), chart.to_chart(f[2]),
                                     chart.to_chart(f[3])};
    const ValidationReport face_report = validate_quad(flat);
    for (const auto& msg : face_report.violations) report.violations.push_back(face_name + ": " + msg);
    if (face_report.ok() && !face_report.convex) {
      report.violations.push_back(face_name + " is not a convex quadrilateral");
      convex = false;
    }
  }
  report.convex = convex && report.ok();
  return report;
}

Hexahedron::Hexahedron(const std::array<Point3, 8>& vertices) : vertices_(vertices) {
  const ValidationReport report = validate_hex(vertices_);
  if (!report.ok()) throw Error(ErrorCode::invalid_geometry, join(report.violations));
  diameter_ = diameter_of<Point3>(vertices_);
  const Point3 c = centroid();
  for (int j = 0; j < 6; ++j) planes_[static_cast<std::size_t>(j)] = face_plane_of(face_vertices(vertices_, j), c);
}

Point3 Hexahedron::centroid() const {
  Point3 c{};
  for (const auto& p : vertices_) c = c + 0.125 * p;
  return c;
}

FaceChart Hexahedron::face_chart(int j) const {
  return chart_of(face_vertices(vertices_, j), face_plane(j));
}

bool Hexahedron::face_contains_vertex(int face, int vertex) const {
  const auto& f = kHexFaces[static_cast<std::size_t>(face)];
  return std::find(f.begin(), f.end(), vertex) != f.end();
}

Quadrilateral face_quadrilateral(const Hexahedron& hex, int face) {
  const FaceChart chart = hex.face_chart(face);
  const auto& f = kHexFaces[static_cast<std::size_t>(face)];
  return Quadrilateral({chart.to_chart(hex.vertex(f[0])), chart.to_chart(hex.vertex(f[1])),
                        chart.to_chart(hex.vertex(f[2])), chart.to_chart(hex.vertex(f[3]))});
}

PointLocation face_of_point_hex(const Hexahedron& hex, Point3 p) {
  return face_of_point_hex(hex, p, kClassifyTol * hex.diameter());
}

PointLocation face_of_point_hex(const Hexahedron& hex, Point3 p, double tol) {
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    const double d = distance(hex.vertex(i), p);
    if (d <= tol && d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  if (best >= 0) return PointLocation::at_vertex(best);

  bool strictly_inside = true;
  for (int j = 0; j < 6; ++j) {
    const double h = hex.face_plane(j).height(p);
    if (h > tol) continue;
    strictly_inside = false;
    if (h < -tol) continue;
    const Quadrilateral face = face_quadrilateral(hex, j);
    if (classify_point_quad(face, hex.face_chart(j).to_chart(p), tol).inside_or_boundary()) {
      return PointLocation::on_face(j);
    }
  }
  return strictly_inside ? PointLocation::interior() : PointLocation::exterior();
}

// --- 1D -------------------------------------------------------------------------

ValidationReport validate_nodes(std::span<const double> nodes) {
  ValidationReport report;
  if (nodes.size() < 3) {
    report.violations.push_back("need at least 3 nodes, got " + std::to_string(nodes.size()));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i])) report.violations.push_back("node " + std::to_string(i + 1) + " is not finite");
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      report.violations.push_back("nodes " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                  " are not strictly increasing");
    }
  }
  report.convex = report.ok();
  return report;
}

NodeSet1D::NodeSet1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  const ValidationReport report = validate_nodes(nodes_);
  if (!report.ok()) throw Error(ErrorCode::invalid_geometry, join(report.violations));
}

}  // namespace mcoords
