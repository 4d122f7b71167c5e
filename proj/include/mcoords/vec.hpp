// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <cmath>

namespace mcoords {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }

  friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Point3 operator*(Point3 a, double s) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Point3, Point3) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Planar cross product x1*y2 - x2*y1.
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }

inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

}  // namespace mcoords
