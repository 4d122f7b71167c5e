// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "mcoords/smallsolve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <utility>

#include "mcoords/error.hpp"

namespace mcoords {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::out_of_domain: return "OutsideDomain";
    case ErrorCode::degenerate_edge: return "DegenerateEdge";
    case ErrorCode::degenerate_triangle: return "DegenerateTriangle";
    case ErrorCode::not_convex: return "NotConvex";
    case ErrorCode::on_boundary: return "OnBoundary";
    case ErrorCode::frame_not_found: return "FrameNotFound";
    case ErrorCode::invalid_geometry: return "InvalidGeometry";
  }
  return "Unknown";
}

SquareSystem::SquareSystem(std::size_t n) : n_(n), matrix_(n * n, 0.0), rhs_(n, 0.0) {
  if (n == 0 || n > kMaxDimension) {
    throw std::invalid_argument("SquareSystem dimension must be in [1, 16], got " + std::to_string(n));
  }
}

std::vector<double> solve_square(const SquareSystem& system) {
  const std::size_t n = system.dimension();
  std::vector<double> lu(system.matrix().begin(), system.matrix().end());
  std::vector<double> x(system.rhs().begin(), system.rhs().end());
  auto at = [&](std::size_t r, std::size_t c) -> double& { return lu[r * n + c]; };

  double scale = 0.0;
  for (double v : lu) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw Error(ErrorCode::singular_matrix, "zero matrix");
  const double threshold = kRelativePivotTolerance * scale;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(at(r, k)) > std::abs(at(pivot, k))) pivot = r;
    }
    if (!(std::abs(at(pivot, k)) >= threshold)) {
      throw Error(ErrorCode::singular_matrix,
                  "pivot " + std::to_string(at(pivot, k)) + " in column " + std::to_string(k) +
                      " below threshold " + std::to_string(threshold));
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = at(r, k) / at(k, k);
      if (f == 0.0) continue;
      at(r, k) = 0.0;
      for (std::size_t c = k + 1; c < n; ++c) at(r, c) -= f * at(k, c);
      x[r] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = x[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= at(k, c) * x[c];
    x[k] = s / at(k, k);
  }

#ifndef NDEBUG
  double bnorm = 0.0;
  for (double v : system.rhs()) bnorm = std::max(bnorm, std::abs(v));
  assert(residual_inf(system, x) <= 1e-10 * (1.0 + bnorm) * std::max(1.0, scale));
#endif
  return x;
}

double residual_inf(const SquareSystem& system, std::span<const double> x) {
  const std::size_t n = system.dimension();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double s = -system.b(r);
    for (std::size_t c = 0; c < n; ++c) s += system.a(r, c) * x[c];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace mcoords
