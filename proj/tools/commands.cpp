// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <limits>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "evaluate.hpp"

namespace mcoords::cli {

namespace {

constexpr double kFiniteDifferenceStep = 1e-6;  // relative to the diameter

std::string number(double v) { return fmt::format("{:.17g}", v == 0.0 ? 0.0 : v); }

template <class Range>
std::string json_array(const Range& values) {
  std::string s = "[";
  bool first = true;
  for (double v : values) {
    if (!first) s += ", ";
    s += number(v);
    first = false;
  }
  return s + "]";
}

std::string json_frame(const Frame3& frame) {
  std::string axes = "[";
  for (int j = 0; j < 3; ++j) {
    const Point3 a = frame.axes()[static_cast<std::size_t>(j)];
    axes += (j ? ", " : "") + json_array(std::array<double, 3>{a.x, a.y, a.z});
  }
  axes += "]";
  return fmt::format(R"({{"kind": "{}", "axes": {}}})", to_string(frame.kind()), axes);
}

struct GridPoint {
  std::vector<double> x;
  std::optional<BaryCoords> phi;
  // gradient[j][i] = d phi_i / d x_j; empty when unavailable
  std::vector<std::vector<double>> gradient;
};

std::optional<BaryCoords> try_evaluate(const GeometrySpec& g, Method m, const std::vector<double>& x) {
  if (!in_domain(g, x)) return std::nullopt;
  try {
    return evaluate_point(g, m, x).coords;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Central differences where both neighbours are in the domain, one-sided otherwise.
std::vector<double> partial_derivative(const GeometrySpec& g, Method m, const GridPoint& pt, std::size_t axis,
                                       double h) {
  std::vector<double> plus = pt.x;
  std::vector<double> minus = pt.x;
  plus[axis] += h;
  minus[axis] -= h;
  const auto fp = try_evaluate(g, m, plus);
  const auto fm = try_evaluate(g, m, minus);
  const BaryCoords& f0 = *pt.phi;
  std::vector<double> out(f0.size());
  for (std::size_t i = 0; i < f0.size(); ++i) {
    if (fp && fm) {
      out[i] = ((*fp)[i] - (*fm)[i]) / (2.0 * h);
    } else if (fp) {
      out[i] = ((*fp)[i] - f0[i]) / h;
    } else if (fm) {
      out[i] = (f0[i] - (*fm)[i]) / h;
    } else {
      return {};
    }
  }
  return out;
}

void evaluate_grid_point(const GeometrySpec& g, Method m, bool derivatives, GridPoint& pt) {
  pt.phi = try_evaluate(g, m, pt.x);
  if (pt.phi && !satisfies(check_invariants(g, pt.x, *pt.phi), InvariantTolerance{})) pt.phi.reset();
  if (!pt.phi || !derivatives) return;
  const double h = kFiniteDifferenceStep * g.diameter();
  for (std::size_t axis = 0; axis < pt.x.size(); ++axis) {
    pt.gradient.push_back(partial_derivative(g, m, pt, axis, h));
  }
}

std::pair<std::vector<double>, std::vector<double>> bounding_box(const GeometrySpec& g) {
  const std::size_t dim = static_cast<std::size_t>(g.dimension());
  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const Point3& v : input_vertices(g)) {
    for (std::size_t k = 0; k < dim; ++k) {
      lo[k] = std::min(lo[k], v[static_cast<int>(k)]);
      hi[k] = std::max(hi[k], v[static_cast<int>(k)]);
    }
  }
  return {lo, hi};
}

// Lexicographic order: the first axis varies slowest.
std::vector<std::vector<double>> grid_points(const GeometrySpec& g, int n) {
  const auto [lo, hi] = bounding_box(g);
  const std::size_t dim = lo.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= static_cast<std::size_t>(n);
  std::vector<std::vector<double>> pts;
  pts.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> x(dim);
    std::size_t rest = flat;
    for (std::size_t k = dim; k-- > 0;) {
      const auto idx = static_cast<double>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
      x[k] = lo[k] + (hi[k] - lo[k]) * idx / static_cast<double>(n - 1);
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

std::string csv_header(const GeometrySpec& g, bool derivatives) {
  static constexpr const char* kAxes[] = {"x", "y", "z"};
  const auto dim = static_cast<std::size_t>(g.dimension());
  std::string h;
  for (std::size_t k = 0; k < dim; ++k) h += std::string(k ? "," : "") + kAxes[k];
  for (std::size_t i = 1; i <= g.size(); ++i) h += fmt::format(",phi{}", i);
  if (derivatives) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 1; i <= g.size(); ++i) h += fmt::format(",dphi{}_d{}", i, kAxes[k]);
    }
  }
  return h;
}

std::string csv_row(const GeometrySpec& g, const GridPoint& pt, bool derivatives) {
  std::string row;
  for (std::size_t k = 0; k < pt.x.size(); ++k) row += (k ? "," : "") + number(pt.x[k]);
  for (std::size_t i = 0; i < g.size(); ++i) row += "," + (pt.phi ? number((*pt.phi)[i]) : std::string());
  if (derivatives) {
    for (std::size_t k = 0; k < pt.x.size(); ++k) {
      const bool have = k < pt.gradient.size() && !pt.gradient[k].empty();
      for (std::size_t i = 0; i < g.size(); ++i) row += "," + (have ? number(pt.gradient[k][i]) : std::string());
    }
  }
  return row;
}

}  // namespace

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GeometrySpec g = load_geometry(opts.geometry);
    const Method m = parse_method(opts.method);
    const std::vector<double> x = parse_point(opts.point);
    require_compatible(g, m);
    const PointResult r = evaluate_point(g, m, x);

    const InvariantReport inv = check_invariants(g, x, r.coords);
    const bool ok = satisfies(inv, InvariantTolerance{});

    out << "{\n";
    out << fmt::format(R"(  "geometry": "{}",)", g.name) << '\n';
    out << fmt::format(R"(  "kind": "{}",)", to_string(g.kind)) << '\n';
    out << fmt::format(R"(  "method": "{}",)", to_string(m)) << '\n';
    out << "  \"point\": " << json_array(x) << ",\n";
    out << "  \"coords\": " << json_array(r.coords);
    if (r.frame) out << ",\n  \"frame\": " << json_frame(*r.frame);
    out << "\n}\n";

    if (!ok) {
      err << fmt::format("error: coordinates violate invariants (sum error {:.3g}, min weight {:.3g}, "
                         "precision error {:.3g})\n",
                         inv.sum_error, inv.min_weight, inv.precision_error);
      return int{kPropertyFailure};
    }
    return int{kOk};
  });
}

int cmd_grid(const GridOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.resolution < 2) throw InputError("resolution must be at least 2");
    const GeometrySpec g = load_geometry(opts.geometry);
    const Method m = parse_method(opts.method);
    require_compatible(g, m);

    std::vector<GridPoint> points;
    for (auto& x : grid_points(g, opts.resolution)) {
      if (in_domain(g, x)) points.push_back({std::move(x), std::nullopt, {}});
    }

    // Workers take points by index; rows are written afterwards in grid order.
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(points.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < points.size(); i = next++) evaluate_grid_point(g, m, opts.derivatives, points[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opts.out.empty() && opts.out != "-") {
      file.open(opts.out, std::ios::binary);
      if (!file) throw InputError("cannot write '" + opts.out + "'");
      sink = &file;
    }
    *sink << csv_header(g, opts.derivatives) << '\n';
    std::size_t failed = 0;
    for (const GridPoint& pt : points) {
      const bool gradient_missing =
          opts.derivatives && pt.phi &&
          std::any_of(pt.gradient.begin(), pt.gradient.end(), [](const auto& d) { return d.empty(); });
      if (!pt.phi || gradient_missing) ++failed;
      *sink << csv_row(g, pt, opts.derivatives) << '\n';
    }
    sink->flush();
    if (!*sink) throw InputError("failed writing grid output");
    if (failed > 0) err << fmt::format("warning: {} of {} grid points failed and were left empty\n", failed, points.size());
    return int{kOk};
  });
}

}  // namespace mcoords::cli
