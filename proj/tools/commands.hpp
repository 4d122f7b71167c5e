// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <string>

#include "geometry_spec.hpp"
#include "mcoords/error.hpp"

namespace mcoords::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kInputError = 2, kDomainError = 3 };

struct EvalOptions {
  std::string geometry;
  std::string point;
  std::string method = "moment";
};

struct GridOptions {
  std::string geometry;
  int resolution = 0;
  std::string method = "moment";
  bool derivatives = false;
  std::string out;  // "-" for stdout
  unsigned jobs = 1;
};

struct CheckOptions {
  std::string geometry;
  int samples = 1000;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::string method = "moment";
};

/// Runs f, turning exceptions into a one-line diagnostic and exit code.
template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::invalid_geometry ? kInputError : kDomainError;
  }
}

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_grid(const GridOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);


}  // namespace mcoords::cli
