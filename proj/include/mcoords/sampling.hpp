// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <cstdint>
#include <random>

#include "mcoords/geometry.hpp"

namespace mcoords {

/// Seeded generator with platform-independent uniform draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Simple (possibly nonconvex) quad in [-1,1]^2 with no near-degenerate corners.
Quadrilateral random_simple_quad(Rng& rng);
Quadrilateral random_convex_quad(Rng& rng);

/// Invertible affine image of the biunit cube (planar faces, convex by construction).
Hexahedron random_affine_cube(Rng& rng);

/// Rejection sampling from the bounding box; returns a point classified Interior.
Point2 sample_interior(const Quadrilateral& quad, Rng& rng);

/// Trilinear image of a uniform point of (-1,1)^3.
Point3 sample_interior(const Hexahedron& hex, Rng& rng);

/// Bilinear image of a uniform point of [0,1]^2 on face j.
Point3 sample_on_face(const Hexahedron& hex, int face, Rng& rng);

}  // namespace mcoords
