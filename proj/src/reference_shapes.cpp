// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/reference_shapes.hpp"

namespace mcoords::shapes {

Quadrilateral biunit_square() { return Quadrilateral({Point2{-1, -1}, Point2{1, -1}, Point2{1, 1}, Point2{-1, 1}}); }

Quadrilateral convex_quad() { return Quadrilateral({Point2{0, 0}, Point2{1, 0}, Point2{0.5, 4}, Point2{0, 2}}); }

Quadrilateral nonconvex_quad() { return Quadrilateral({Point2{0, 0}, Point2{2, 0}, Point2{1, 4}, Point2{1, 2}}); }

Hexahedron biunit_cube() {
  std::array<Point3, 8> v{};
  for (std::size_t i = 0; i < 8; ++i) {
    v[i] = {static_cast<double>(kHexSignPattern[0][i]), static_cast<double>(kHexSignPattern[1][i]),
            static_cast<double>(kHexSignPattern[2][i])};
  }
  return Hexahedron(v);
}

Hexahedron convex_hex() {
  return Hexahedron({Point3{1, 2, 1}, Point3{1, 2, -1}, Point3{1, 0, -1}, Point3{1, 0, 1}, Point3{-1, 1, 1},
                     Point3{-1, 1, -1}, Point3{-1, -1, -1}, Point3{-1, -1, 1}});
}

}  // namespace mcoords::shapes
