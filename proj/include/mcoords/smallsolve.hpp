// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcoords {

/// Dense n x n system A x = b, row-major.
class SquareSystem {
 public:
  static constexpr std::size_t kMaxDimension = 16;

  explicit SquareSystem(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }

  double& a(std::size_t row, std::size_t col) { return matrix_[row * n_ + col]; }
  double a(std::size_t row, std::size_t col) const { return matrix_[row * n_ + col]; }
  double& b(std::size_t row) { return rhs_[row]; }
  double b(std::size_t row) const { return rhs_[row]; }

  std::span<double> row(std::size_t r) { return {matrix_.data() + r * n_, n_}; }
  std::span<const double> row(std::size_t r) const { return {matrix_.data() + r * n_, n_}; }

  std::span<const double> matrix() const noexcept { return matrix_; }
  std::span<const double> rhs() const noexcept { return rhs_; }

 private:
  std::size_t n_;
  std::vector<double> matrix_;
  std::vector<double> rhs_;
};

/// Pivots smaller than this fraction of the largest |a_ij| mark the system singular.
inline constexpr double kRelativePivotTolerance = 1e-13;

/// Gaussian elimination with partial pivoting.
/// Throws Error(singular_matrix) when a pivot falls below the relative threshold.
std::vector<double> solve_square(const SquareSystem& system);

/// max_i |(A x - b)_i|
double residual_inf(const SquareSystem& system, std::span<const double> x);

}  // namespace mcoords
