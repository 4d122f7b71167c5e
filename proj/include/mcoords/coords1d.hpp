// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <cstddef>
#include <vector>

#include "mcoords/bary.hpp"
#include "mcoords/geometry.hpp"
#include "mcoords/smallsolve.hpp"

namespace mcoords {

/// Moment system for an interval with n nodes.
///
/// Columns follow the natural node order. Rows:
///   0      ones
///   1      (x_i - x) / L
///   2      (-1)^i |x_i - x| / L          (zero-based i)
///   3..n-1 adjacency rows e_a + e_b for consecutive entries (a, b) of
///          permutation[2..], i.e. the nodes outside the containing interval
/// where L is the length of the node range. Right-hand side is e_0.
struct Moment1DSystem {
  double x = 0.0;
  /// Containing interval [x_k, x_{k+1}]; a query on a shared node uses the lower interval.
  std::size_t interval = 0;
  /// (k, k+1, 0, ..., k-1, k+2, ..., n-1)
  std::vector<std::size_t> permutation;
  SquareSystem system;
};

Moment1DSystem build_system_1d(const NodeSet1D& nodes, double x);

/// Solves the moment system; equals the hat functions of the containing interval.
BaryCoords moment_coords_1d(const NodeSet1D& nodes, double x);

/// Piecewise-linear nodal basis evaluated directly.
BaryCoords hat_oracle(const NodeSet1D& nodes, double x);

}  // namespace mcoords
