// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/coords1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcoords/error.hpp"

namespace mcoords {

namespace {

constexpr double kDomainTol = 1e-12;  // relative to the node range

double checked_query(const NodeSet1D& nodes, double x) {
  const double slack = kDomainTol * nodes.length();
  const double lo = nodes[0];
  const double hi = nodes[nodes.size() - 1];
  if (!(x >= lo - slack && x <= hi + slack)) {
    throw Error(ErrorCode::out_of_domain,
                "x = " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return std::clamp(x, lo, hi);
}

// Lower interval on ties: x == x_k (k > 0) lands in [x_{k-1}, x_k].
std::size_t containing_interval(const NodeSet1D& nodes, double x) {
  const auto v = nodes.nodes();
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  const auto k = static_cast<std::size_t>(it - v.begin());
  return std::clamp<std::size_t>(k == 0 ? 0 : k - 1, 0, v.size() - 2);
}

}  // namespace

Moment1DSystem build_system_1d(const NodeSet1D& nodes, double x) {
  x = checked_query(nodes, x);
  const std::size_t n = nodes.size();
  const std::size_t k = containing_interval(nodes, x);
  const double scale = 1.0 / nodes.length();

  Moment1DSystem out{x, k, {}, SquareSystem(n)};
  out.permutation.reserve(n);
  out.permutation.push_back(k);
  out.permutation.push_back(k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != k && i != k + 1) out.permutation.push_back(i);
  }

  SquareSystem& s = out.system;
  for (std::size_t i = 0; i < n; ++i) {
    const double offset = nodes[i] - x;
    s.a(0, i) = 1.0;
    s.a(1, i) = offset * scale;
    s.a(2, i) = (i % 2 == 0 ? 1.0 : -1.0) * std::abs(offset) * scale;
  }
  // Tie the nodes outside [x_k, x_{k+1}] together pairwise so that any mass
  // on them alternates in sign; the distance row then forces it to zero.
  for (std::size_t r = 3; r < n; ++r) {
    s.a(r, out.permutation[r - 1]) = 1.0;
    s.a(r, out.permutation[r]) = 1.0;
  }
  s.b(0) = 1.0;
  return out;
}

BaryCoords moment_coords_1d(const NodeSet1D& nodes, double x) {
  const Moment1DSystem m = build_system_1d(nodes, x);
  return BaryCoords(solve_square(m.system));
}

BaryCoords hat_oracle(const NodeSet1D& nodes, double x) {
  x = checked_query(nodes, x);
  const std::size_t k = containing_interval(nodes, x);
  std::vector<double> w(nodes.size(), 0.0);
  const double left = (nodes[k + 1] - x) / (nodes[k + 1] - nodes[k]);
  w[k] = left;
  w[k + 1] = 1.0 - left;
  return BaryCoords(std::move(w));
}

}  // namespace mcoords
