// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include "mcoords/geometry.hpp"

namespace mcoords::shapes {

/// [-1,1]^2, counterclockwise from (-1,-1).
Quadrilateral biunit_square();

/// (0,0), (1,0), (1/2,4), (0,2)
Quadrilateral convex_quad();

/// (0,0), (2,0), (1,4), (1,2); reflex at the last vertex.
Quadrilateral nonconvex_quad();

/// [-1,1]^3 with vertex signs following kHexSignPattern.
Hexahedron biunit_cube();

/// Convex hexahedron with two non-parallel faces:
/// (1,2,1) (1,2,-1) (1,0,-1) (1,0,1) (-1,1,1) (-1,1,-1) (-1,-1,-1) (-1,-1,1)
Hexahedron convex_hex();

}  // namespace mcoords::shapes
