// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include <gtest/gtest.h>

#include <cmath>

#include "mcoords/coords2d.hpp"
#include "mcoords/coords3d.hpp"
#include "mcoords/error.hpp"
#include "mcoords/reference_shapes.hpp"
#include "mcoords/sampling.hpp"

namespace mcoords {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

void check_axioms(const Hexahedron& hex, Point3 p, const BaryCoords& phi) {
  ASSERT_EQ(phi.size(), 8u);
  EXPECT_NEAR(phi.sum(), 1.0, 1e-12);
  EXPECT_GE(phi.min(), -1e-10);
  Point3 r{};
  for (std::size_t i = 0; i < 8; ++i) r = r + phi[i] * hex.vertex(static_cast<int>(i));
  EXPECT_LE(distance(r, p), 1e-9 * hex.diameter());
}

TEST(PartialDistanceMatrix, CubeCenter) {
  const Hexahedron cube = shapes::biunit_cube();
  const Point3 p{0, 0, 0};
  const PartialDistanceMatrix m = partial_distance_matrix(cube, p, Frame3::identity(p));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(m.entries[r][i], kPartialDistanceSigns[r][i] * kSqrt2, 1e-15);
  }
}

TEST(PartialDistanceMatrix, SignLayout) {
  const std::array<std::array<int, 8>, 3> expected{{
      {+1, -1, +1, -1, +1, -1, +1, -1},
      {+1, -1, -1, +1, -1, +1, +1, -1},
      {+1, +1, -1, -1, -1, -1, +1, +1},
  }};
  EXPECT_EQ(kPartialDistanceSigns, expected);
  EXPECT_EQ(kDistanceSigns, (std::array<int, 8>{+1, -1, +1, -1, -1, +1, -1, +1}));
}

TEST(PartialDistanceMatrix, FaceColumnsZeroed) {
  const Hexahedron cube = shapes::biunit_cube();
  const Point3 p{1, 0, 0};
  const PartialDistanceMatrix m = partial_distance_matrix(cube, p, Frame3::identity(p));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(m.entries[r][i], 0.0);
    for (std::size_t i = 4; i < 8; ++i) EXPECT_NE(m.entries[r][i], 0.0);
  }
}

TEST(PartialDistanceMatrix, HandProjectionDistances) {
  const Hexahedron cube = shapes::biunit_cube();
  const Point3 p{0.5, 0, 0};
  const PartialDistanceMatrix m = partial_distance_matrix(cube, p, Frame3::identity(p));
  // v1 - p = (0.5, 1, 1)
  EXPECT_NEAR(m.entries[0][0], kSqrt2, 1e-15);
  EXPECT_NEAR(m.entries[1][0], std::sqrt(1.25), 1e-15);
  EXPECT_NEAR(m.entries[2][0], std::sqrt(1.25), 1e-15);
  // v5 - p = (-1.5, 1, 1)
  EXPECT_NEAR(m.entries[1][4], -std::sqrt(3.25), 1e-15);
}

TEST(DistanceRow3D, Examples) {
  const Hexahedron cube = shapes::biunit_cube();
  const Point3 c{0, 0, 0};
  const auto d = distance_row_3d(cube, c, Frame3::identity(c));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(d[i], kDistanceSigns[i] * kSqrt3, 1e-15);

  const Point3 v1 = cube.vertex(0);
  EXPECT_EQ(distance_row_3d(cube, v1, Frame3::identity(v1))[0], 0.0);

  const Hexahedron hex = shapes::convex_hex();
  const Point3 p{0, 0.5, 0};
  const auto dh = distance_row_3d(hex, p, Frame3::identity(p));
  // |v1 - p| = |(1, 1.5, 1)|, |v5 - p| = |(-1, 0.5, 1)|, |v7 - p| = |(-1, -1.5, -1)|
  EXPECT_NEAR(dh[0], std::sqrt(4.25), 1e-15);
  EXPECT_NEAR(dh[4], -std::sqrt(2.25), 1e-15);
  EXPECT_NEAR(dh[6], -std::sqrt(4.25), 1e-15);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(dh[i]), distance(hex.vertex(static_cast<int>(i)), p), 1e-15);
  }
}

TEST(SignPatternOk, Examples) {
  const Hexahedron cube = shapes::biunit_cube();
  const double tol = 1e-12 * cube.diameter();
  for (Point3 p : {Point3{0, 0, 0}, Point3{0.3, -0.2, 0.9}}) {
    EXPECT_TRUE(sign_pattern_ok(frame_coordinates(cube, p, Frame3::identity(p)), tol));
  }
  const Point3 on_face{1, 0, 0};
  EXPECT_FALSE(sign_pattern_ok(frame_coordinates(cube, on_face, Frame3::identity(on_face)), tol));

  const Hexahedron hex = shapes::convex_hex();
  const Point3 o{0, 0, 0};
  EXPECT_FALSE(sign_pattern_ok(frame_coordinates(hex, o, Frame3::identity(o)), tol));
}

TEST(ReferenceFrame, CubeUsesIdentity) {
  const Hexahedron cube = shapes::biunit_cube();
  Rng rng(51);
  for (int k = 0; k < 100; ++k) {
    const Point3 p = sample_interior(cube, rng);
    EXPECT_EQ(reference_frame(cube, p).kind(), FrameKind::identity);
  }
}

TEST(ReferenceFrame, ConvexHexOrigin) {
  const Hexahedron hex = shapes::convex_hex();
  const Point3 p{0, 0, 0};
  const Frame3 f = reference_frame(hex, p);
  EXPECT_NE(f.kind(), FrameKind::identity);
  EXPECT_TRUE(sign_pattern_ok(frame_coordinates(hex, p, f), 1e-12 * hex.diameter()));
  for (const Point3& axis : f.axes()) EXPECT_NEAR(norm(axis), 1.0, 1e-12);
  EXPECT_GE(std::abs(f.determinant()), 1e-8);
}

TEST(ReferenceFrame, AffineCubes) {
  Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const Hexahedron hex = random_affine_cube(rng);
    Point3 center{};
    for (const Point3& v : hex.vertices()) center = center + 0.125 * v;
    const Frame3 f = reference_frame(hex, center);
    EXPECT_TRUE(sign_pattern_ok(frame_coordinates(hex, center, f), 1e-12 * hex.diameter()));
    for (int k = 0; k < 50; ++k) {
      const Point3 p = sample_interior(hex, rng);
      EXPECT_TRUE(sign_pattern_ok(frame_coordinates(hex, p, reference_frame(hex, p)), 1e-12 * hex.diameter()));
    }
  }
}

TEST(ReferenceFrame, BoundaryAndExterior) {
  const Hexahedron cube = shapes::biunit_cube();
  EXPECT_EQ(reference_frame(cube, {1, 0.2, 0.1}).kind(), FrameKind::boundary);
  try {
    reference_frame(cube, {2, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::out_of_domain);
  }
}

TEST(Frame3, RejectsDependentAxes) {
  EXPECT_THROW(Frame3({Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, 0}}, {}, FrameKind::bisector), Error);
  EXPECT_THROW(Frame3({Point3{1, 0, 0}, Point3{0, 0, 0}, Point3{0, 0, 1}}, {}, FrameKind::bisector), Error);
  const Frame3 skew({Point3{2, 0, 0}, Point3{1, 1, 0}, Point3{0, 0, 3}}, {1, 1, 1}, FrameKind::bisector);
  const Point3 w = skew.to_local(Point3{1, 1, 0} * (1 / std::sqrt(2.0)) + Point3{0, 0, 1});
  EXPECT_NEAR(w.x, 0.0, 1e-15);
  EXPECT_NEAR(w.y, 1.0, 1e-15);
  EXPECT_NEAR(w.z, 1.0, 1e-15);
}

TEST(MomentCoordsHex, Examples) {
  const Hexahedron cube = shapes::biunit_cube();
  const BaryCoords center = moment_coords_hex(cube, {0, 0, 0});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(center[i], 0.125, 1e-15);
  const BaryCoords face = moment_coords_hex(cube, {1, 0, 0});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(face[i], i < 4 ? 0.25 : 0.0, 1e-15);
  const Hexahedron hex = shapes::convex_hex();
  const BaryCoords v1 = moment_coords_hex(hex, {1, 2, 1});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(v1[i], i == 0 ? 1.0 : 0.0);
}

TEST(MomentCoordsHex, KroneckerAtAllVertices) {
  Rng rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    const Hexahedron hex = trial == 0 ? shapes::convex_hex() : random_affine_cube(rng);
    for (std::size_t i = 0; i < 8; ++i) {
      const BaryCoords phi = moment_coords_hex(hex, hex.vertex(static_cast<int>(i)));
      for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(phi[j], i == j ? 1.0 : 0.0);
    }
  }
}

TEST(MomentCoordsHex, AxiomsOnRandomHexahedra) {
  Rng rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const Hexahedron hex = trial == 0 ? shapes::convex_hex() : random_affine_cube(rng);
    for (int k = 0; k < 200; ++k) {
      const Point3 p = sample_interior(hex, rng);
      check_axioms(hex, p, moment_coords_hex(hex, p));
    }
  }
}

TEST(MomentCoordsHex, ConstraintsHoldInEveryAcceptedFrame) {
  const Hexahedron hex = shapes::convex_hex();
  Rng rng(55);
  int non_identity = 0;
  for (int k = 0; k < 200; ++k) {
    const Point3 p = sample_interior(hex, rng);
    const HexEvaluation e = evaluate_hex(hex, p);
    non_identity += e.frame.kind() != FrameKind::identity;
    check_axioms(hex, p, e.coords);
  }
  EXPECT_GT(non_identity, 0);
}

TEST(MomentCoordsHex, FacetReduction) {
  const Hexahedron hex = shapes::convex_hex();
  Rng rng(56);
  for (int face = 0; face < 6; ++face) {
    const auto& f = kHexFaces[static_cast<std::size_t>(face)];
    const Quadrilateral fq = face_quadrilateral(hex, face);
    for (int k = 0; k < 50; ++k) {
      const Point3 p = sample_on_face(hex, face, rng);
      const BaryCoords phi = moment_coords_hex(hex, p);
      const BaryCoords planar = moment_coords_quad(fq, hex.face_chart(face).to_chart(p));
      for (std::size_t l = 0; l < 4; ++l) {
        EXPECT_NEAR(phi[static_cast<std::size_t>(f[l])], planar[static_cast<std::size_t>(fq.stored_index(static_cast<int>(l)))],
                    1e-9);
      }
      for (std::size_t i = 0; i < 8; ++i) {
        if (!hex.face_contains_vertex(face, static_cast<int>(i))) EXPECT_LE(std::abs(phi[i]), 1e-10);
      }
    }
  }
}

TEST(MomentCoordsHex, EdgeReduction) {
  Rng rng(57);
  const std::array<std::pair<int, int>, 12> edges{
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};
  for (int trial = 0; trial < 3; ++trial) {
    const Hexahedron hex = trial == 0 ? shapes::convex_hex() : random_affine_cube(rng);
    for (const auto& [a, b] : edges) {
      const double t = rng.uniform(0.05, 0.95);
      const Point3 p = (1 - t) * hex.vertex(a) + t * hex.vertex(b);
      const BaryCoords phi = moment_coords_hex(hex, p);
      for (int i = 0; i < 8; ++i) {
        const double expected = i == a ? 1 - t : (i == b ? t : 0.0);
        EXPECT_NEAR(phi[static_cast<std::size_t>(i)], expected, 1e-9) << "edge " << a << "-" << b << " i=" << i;
      }
    }
  }
}

TEST(MomentCoordsHex, ExteriorThrows) {
  try {
    moment_coords_hex(shapes::convex_hex(), {0, 3, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::out_of_domain);
  }
}

}  // namespace
}  // namespace mcoords
