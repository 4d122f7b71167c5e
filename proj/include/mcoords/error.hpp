// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcoords {

enum class ErrorCode {
  singular_matrix,
  out_of_domain,
  degenerate_edge,
  degenerate_triangle,
  not_convex,
  on_boundary,
  frame_not_found,
  invalid_geometry,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every operation in the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcoords
