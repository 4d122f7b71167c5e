// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcoords {

/// Weights of a point with respect to the vertices (or nodes) of a cell.
class BaryCoords {
 public:
  BaryCoords() = default;
  explicit BaryCoords(std::vector<double> weights) : weights_(std::move(weights)) {}

  static BaryCoords kronecker(std::size_t n, std::size_t i) {
    std::vector<double> w(n, 0.0);
    w[i] = 1.0;
    return BaryCoords(std::move(w));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  double& operator[](std::size_t i) { return weights_[i]; }

  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  std::span<const double> weights() const noexcept { return weights_; }

  double sum() const noexcept {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

  double min() const noexcept {
    double m = weights_.empty() ? 0.0 : weights_.front();
    for (double w : weights_) m = w < m ? w : m;
    return m;
  }

 private:
  std::vector<double> weights_;
};

/// Largest absolute componentwise difference; sizes must match.
inline double max_abs_diff(const BaryCoords& a, const BaryCoords& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    m = d > m ? d : m;
  }
  return m;
}

}  // namespace mcoords
