// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <vector>

#include <fmt/format.h>

#include "commands.hpp"
#include "evaluate.hpp"
#include "mcoords/coords1d.hpp"
#include "mcoords/coords2d.hpp"
#include "mcoords/coords3d.hpp"
#include "mcoords/sampling.hpp"

namespace mcoords::cli {

namespace {

struct Property {
  std::string name;
  double tolerance;
  double worst = 0.0;  // largest violation magnitude seen
  std::size_t cases = 0;
  std::size_t errors = 0;
  std::string first_error;

  void observe(double violation) {
    worst = std::max(worst, violation);
    ++cases;
  }

  // Runs f; an Error thrown by the library counts as a failing case.
  void run(const std::function<double()>& f) {
    try {
      observe(f());
    } catch (const Error& e) {
      ++cases;
      if (errors++ == 0) first_error = e.what();
    }
  }

  bool passed() const { return errors == 0 && worst <= tolerance; }
};

class Suite {
 public:
  explicit Suite(std::optional<double> override_tol) : override_(override_tol) {}

  Property& add(std::string name, double tol) {
    props_.push_back({std::move(name), override_.value_or(tol), 0.0, 0, 0, {}});
    return props_.back();
  }

  int report(std::ostream& out) const {
    bool all = true;
    for (const Property& p : props_) {
      all = all && p.passed();
      out << fmt::format("{} {:<22} worst={:.3e} tol={:.1e} cases={}", p.passed() ? "PASS" : "FAIL", p.name, p.worst,
                         p.tolerance, p.cases);
      if (p.errors) out << fmt::format(" errors={} ({})", p.errors, p.first_error);
      out << '\n';
    }
    out << (all ? "all properties passed\n" : "some properties FAILED\n");
    return all ? kOk : kPropertyFailure;
  }

 private:
  std::optional<double> override_;
  std::deque<Property> props_;
};

double kronecker_error(const BaryCoords& phi, std::size_t vertex) {
  double e = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) e = std::max(e, std::abs(phi[i] - (i == vertex ? 1.0 : 0.0)));
  return e;
}

struct Axioms {
  Property& sum;
  Property& nonneg;
  Property& precision;

  void observe(const GeometrySpec& g, const std::vector<double>& x, const PointResult& r) {
    const InvariantReport inv = check_invariants(g, x, r.coords);
    sum.observe(inv.sum_error);
    nonneg.observe(std::max(0.0, -inv.min_weight));
    precision.observe(inv.precision_error);
  }
};

Axioms add_axioms(Suite& s, double precision_tol = 1e-10) {
  return {s.add("partition_of_unity", 1e-12), s.add("nonnegativity", 1e-10), s.add("linear_precision", precision_tol)};
}

void check_interval(const GeometrySpec& g, Method m, const CheckOptions& opts, Rng& rng, Suite& s) {
  const NodeSet1D& nodes = g.nodes();
  Axioms ax = add_axioms(s);
  Property& hat = s.add("hat_equivalence", 1e-10);
  Property& delta = s.add("kronecker_delta", 1e-12);
  for (int k = 0; k < opts.samples; ++k) {
    const std::vector<double> x{rng.uniform(nodes[0], nodes[nodes.size() - 1])};
    hat.run([&] {
      const PointResult r = evaluate_point(g, m, x);
      ax.observe(g, x, r);
      return max_abs_diff(r.coords, hat_oracle(nodes, x[0]));
    });
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    delta.run([&] { return kronecker_error(evaluate_point(g, m, std::vector<double>{nodes[i]}).coords, i); });
  }
}

void check_quad(const GeometrySpec& g, Method m, const CheckOptions& opts, Rng& rng, Suite& s) {
  const Quadrilateral& q = g.quad();
  const bool closed_form = m == Method::mvc_oracle || m == Method::wachspress_oracle;
  Axioms ax = add_axioms(s);

  Property* oracle = nullptr;
  Property* cramer = nullptr;
  if (m == Method::moment || m == Method::mvc_oracle || m == Method::cramer) {
    oracle = &s.add("mvc_equivalence", 1e-10);
    if (m == Method::moment) cramer = &s.add("cramer_equivalence", 1e-10);
  } else {
    oracle = &s.add("wachspress_equivalence", 1e-10);
  }

  for (int k = 0; k < opts.samples; ++k) {
    const Point2 p = sample_interior(q, rng);
    const std::vector<double> x{p.x, p.y};
    oracle->run([&] {
      const PointResult r = evaluate_point(g, m, x);
      ax.observe(g, x, r);
      const Method other = (m == Method::wachspress || m == Method::wachspress_oracle)
                               ? (m == Method::wachspress ? Method::wachspress_oracle : Method::wachspress)
                               : (m == Method::moment || m == Method::cramer ? Method::mvc_oracle : Method::moment);
      return max_abs_diff(r.coords, evaluate_point(g, other, x).coords);
    });
    if (cramer) {
      cramer->run([&] { return max_abs_diff(evaluate_point(g, m, x).coords, evaluate_point(g, Method::cramer, x).coords); });
    }
  }
  if (closed_form) return;  // undefined on the boundary

  Property& delta = s.add("kronecker_delta", 1e-12);
  Property& edge = s.add("edge_reduction", 1e-10);
  const std::vector<Point3> v = input_vertices(g);
  for (std::size_t i = 0; i < 4; ++i) {
    delta.run([&] { return kronecker_error(evaluate_point(g, m, std::vector<double>{v[i].x, v[i].y}).coords, i); });
  }
  // On edge (v_i, v_{i+1}) the weights are the 1D linear interpolants.
  const int per_edge = std::max(1, opts.samples / 10);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    for (int k = 0; k < per_edge; ++k) {
      const double t = rng.uniform(0.0, 1.0);
      const Point3 p = (1.0 - t) * v[i] + t * v[j];
      edge.run([&] {
        const BaryCoords phi = evaluate_point(g, m, std::vector<double>{p.x, p.y}).coords;
        double e = 0.0;
        for (std::size_t l = 0; l < 4; ++l) {
          const double expected = l == i ? 1.0 - t : (l == j ? t : 0.0);
          e = std::max(e, std::abs(phi[l] - expected));
        }
        return e;
      });
    }
  }
}

void check_hex(const GeometrySpec& g, Method m, const CheckOptions& opts, Rng& rng, Suite& s) {
  const Hexahedron& h = g.hex();
  Axioms ax = add_axioms(s, 1e-9);
  Property& pattern = s.add("sign_pattern", 0.0);
  Property& delta = s.add("kronecker_delta", 1e-12);
  Property& facet = s.add("facet_reduction", 1e-9);
  Property& off_face = s.add("off_face_weights", 1e-10);

  for (int k = 0; k < opts.samples; ++k) {
    const Point3 p = sample_interior(h, rng);
    const std::vector<double> x{p.x, p.y, p.z};
    pattern.run([&] {
      const PointResult r = evaluate_point(g, m, x);
      ax.observe(g, x, r);
      const Frame3& frame = *r.frame;
      return sign_pattern_ok(frame_coordinates(h, p, frame), 1e-12 * h.diameter()) ? 0.0 : 1.0;
    });
  }
  for (std::size_t i = 0; i < 8; ++i) {
    const Point3 v = h.vertex(static_cast<int>(i));
    delta.run([&] { return kronecker_error(evaluate_point(g, m, std::vector<double>{v.x, v.y, v.z}).coords, i); });
  }

  const int per_face = std::max(1, opts.samples / 10);
  for (int face = 0; face < 6; ++face) {
    const auto& f = kHexFaces[static_cast<std::size_t>(face)];
    const Quadrilateral fq = face_quadrilateral(h, face);
    const FaceChart chart = h.face_chart(face);
    for (int k = 0; k < per_face; ++k) {
      const Point3 p = sample_on_face(h, face, rng);
      BaryCoords phi;
      facet.run([&] {
        phi = evaluate_point(g, m, std::vector<double>{p.x, p.y, p.z}).coords;
        const BaryCoords planar = moment_coords_quad(fq, chart.to_chart(p));
        double e = 0.0;
        for (std::size_t l = 0; l < 4; ++l) {
          e = std::max(e, std::abs(phi[static_cast<std::size_t>(f[l])] -
                                   planar[static_cast<std::size_t>(fq.stored_index(static_cast<int>(l)))]));
        }
        return e;
      });
      if (phi.size() != 8) continue;
      double off = 0.0;
      for (std::size_t l = 0; l < 8; ++l) {
        if (std::find(f.begin(), f.end(), static_cast<int>(l)) == f.end()) off = std::max(off, std::abs(phi[l]));
      }
      off_face.observe(off);
    }
  }
}

}  // namespace

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.samples < 1) throw InputError("samples must be positive");
    if (opts.tol && !(*opts.tol >= 0.0)) throw InputError("tolerance must be nonnegative");
    const GeometrySpec g = load_geometry(opts.geometry);
    const Method m = parse_method(opts.method);
    try {
      require_compatible(g, m);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_convex) throw;
      out << "REFUSED " << to_string(m) << " on " << g.name << ": " << e.what() << '\n';
      return int{kDomainError};
    }

    out << fmt::format("geometry {} ({}), method {}, samples {}, seed {}\n", g.name, to_string(g.kind), to_string(m),
                       opts.samples, opts.seed);
    Rng rng(opts.seed);
    Suite suite(opts.tol);
    switch (g.kind) {
      case GeometryKind::interval: check_interval(g, m, opts, rng, suite); break;
      case GeometryKind::quad: check_quad(g, m, opts, rng, suite); break;
      case GeometryKind::hex: check_hex(g, m, opts, rng, suite); break;
    }
    return suite.report(out);
  });
}

}  // namespace mcoords::cli
