// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "evaluate.hpp"
#include "geometry_spec.hpp"
#include "mcoords/coords2d.hpp"
#include "mcoords/reference_shapes.hpp"

namespace mcoords::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome eval(const std::string& geometry, const std::string& point, const std::string& method = "moment") {
  std::ostringstream out, err;
  const int code = cmd_eval({geometry, point, method}, out, err);
  return {code, out.str(), err.str()};
}

Outcome grid(GridOptions opts) {
  std::ostringstream out, err;
  opts.out = "-";
  const int code = cmd_grid(opts, out, err);
  return {code, out.str(), err.str()};
}

Outcome check(CheckOptions opts) {
  std::ostringstream out, err;
  const int code = cmd_check(opts, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string data_file(const std::string& name) { return std::string(MCOORDS_TEST_DATA) + "/" + name; }

TEST(LoadGeometry, Builtins) {
  for (const auto& name : builtin_names()) EXPECT_NO_THROW(load_geometry(name)) << name;
  EXPECT_EQ(load_geometry("conv-hex").kind, GeometryKind::hex);
  EXPECT_EQ(load_geometry("nonconv-quad").size(), 4u);
}

TEST(ParseGeometry, Kinds) {
  const GeometrySpec q = parse_geometry(R"({"kind":"quad","vertices":[[0,0],[1,0],[1,1],[0,1]]})", "q");
  EXPECT_EQ(q.kind, GeometryKind::quad);
  EXPECT_DOUBLE_EQ(q.diameter(), std::sqrt(2.0));
  const GeometrySpec n = parse_geometry(R"({"kind":"interval","nodes":[0,0.5,2]})", "n");
  EXPECT_EQ(n.size(), 3u);
  EXPECT_EQ(n.dimension(), 1);
  const GeometrySpec h = parse_geometry(
      R"({"kind":"hex","vertices":[[1,1,1],[1,1,-1],[1,-1,-1],[1,-1,1],[-1,1,1],[-1,1,-1],[-1,-1,-1],[-1,-1,1]]})", "h");
  EXPECT_EQ(h.size(), 8u);
}

TEST(ParseGeometry, Errors) {
  EXPECT_THROW(parse_geometry("{", "x"), InputError);
  EXPECT_THROW(parse_geometry(R"({"kind":"pentagon"})", "x"), InputError);
  EXPECT_THROW(parse_geometry(R"({"kind":"quad","vertices":[[0,0],[1,0],[1,1]]})", "x"), InputError);
  EXPECT_THROW(parse_geometry(R"({"kind":"quad","vertices":[[0,0],[1,1],[1,0],[0,1]]})", "x"), InputError);
  EXPECT_THROW(parse_geometry(R"({"kind":"quad","vertices":[[0,0],[1,"a"],[1,1],[0,1]]})", "x"), InputError);
  EXPECT_THROW(parse_geometry(R"({"kind":"interval","nodes":[0,1]})", "x"), InputError);
  EXPECT_THROW(load_geometry("/nonexistent/geometry.json"), InputError);
}

TEST(ParsePoint, Values) {
  EXPECT_EQ(parse_point("0.5,1"), (std::vector<double>{0.5, 1}));
  EXPECT_EQ(parse_point(" -1e-3 , 2 ,3"), (std::vector<double>{-1e-3, 2, 3}));
  EXPECT_THROW(parse_point("1,,2"), InputError);
  EXPECT_THROW(parse_point("1,x"), InputError);
  EXPECT_THROW(parse_point(""), InputError);
}

TEST(CmdEval, WachspressFixture) {
  const Outcome r = eval("conv-quad", "0.5,1", "wachspress");
  ASSERT_EQ(r.code, kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["method"], "wachspress");
  const std::vector<double> expected{0.3, 0.4, 0.2, 0.1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(doc["coords"][i].get<double>(), expected[i], 1e-12);
  EXPECT_NE(r.out.find("0.29999999999999999"), std::string::npos);
}

TEST(CmdEval, SquareCenterAndHexVertex) {
  const Outcome sq = eval("biunit-square", "0,0");
  ASSERT_EQ(sq.code, kOk);
  const json sq_doc = json::parse(sq.out);
  for (const auto& c : sq_doc["coords"]) EXPECT_EQ(c.get<double>(), 0.25);

  const Outcome hx = eval("conv-hex", "1,2,1");
  ASSERT_EQ(hx.code, kOk);
  const json doc = json::parse(hx.out);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(doc["coords"][i].get<double>(), i == 0 ? 1.0 : 0.0);
  EXPECT_EQ(doc["frame"]["kind"], "boundary");
}

TEST(CmdEval, HexRecordsFrame) {
  const Outcome r = eval("conv-hex", "0,0,0");
  ASSERT_EQ(r.code, kOk);
  const json doc = json::parse(r.out);
  EXPECT_NE(doc["frame"]["kind"], "identity");
  EXPECT_EQ(doc["frame"]["axes"].size(), 3u);
}

TEST(CmdEval, ClockwiseFileKeepsInputOrder) {
  const Outcome r = eval(data_file("cw_quad.json"), "0.5,1", "wachspress");
  ASSERT_EQ(r.code, kOk) << r.err;
  // input order is v1, v4, v3, v2 of the convex example
  const std::vector<double> expected{0.3, 0.1, 0.2, 0.4};
  const json doc = json::parse(r.out);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(doc["coords"][i].get<double>(), expected[i], 1e-12);
}

TEST(CmdEval, ExitCodes) {
  EXPECT_EQ(eval("conv-quad", "5,5").code, kDomainError);
  EXPECT_EQ(eval("nonconv-quad", "1,1", "wachspress").code, kDomainError);
  EXPECT_EQ(eval("biunit-square", "1,0", "mvc-oracle").code, kDomainError);
  EXPECT_EQ(eval("missing.json", "0,0").code, kInputError);
  EXPECT_EQ(eval("conv-quad", "0,0,0").code, kInputError);
  EXPECT_EQ(eval("conv-quad", "0.5,1", "harmonic").code, kInputError);
  EXPECT_EQ(eval("conv-hex", "0,0,0", "cramer").code, kInputError);
  const Outcome r = eval("conv-quad", "5,5");
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CmdEval, IntervalMethods) {
  const std::string nodes = data_file("interval.json");
  const Outcome m = eval(nodes, "0.2");
  const Outcome h = eval(nodes, "0.2", "hat");
  ASSERT_EQ(m.code, kOk);
  ASSERT_EQ(h.code, kOk);
  const json a = json::parse(m.out)["coords"], b = json::parse(h.out)["coords"];
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i].get<double>(), b[i].get<double>(), 1e-12);
}

TEST(CmdGrid, SquareThreeByThree) {
  const Outcome r = grid({"biunit-square", 3, "moment", false, "", 1});
  ASSERT_EQ(r.code, kOk);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "y", "phi1", "phi2", "phi3", "phi4"}));
  EXPECT_EQ(rows[5], (std::vector<std::string>{"0", "0", "0.25", "0.25", "0.25", "0.25"}));
  // x varies slowest
  EXPECT_EQ(rows[1][0], "-1");
  EXPECT_EQ(rows[1][1], "-1");
  EXPECT_EQ(rows[2][0], "-1");
  EXPECT_EQ(rows[2][1], "0");
  EXPECT_TRUE(r.err.empty());
}

TEST(CmdGrid, NonconvexNonnegative) {
  const Outcome r = grid({"nonconv-quad", 101, "moment", false, "", 2});
  ASSERT_EQ(r.code, kOk);
  const auto rows = parse_csv(r.out);
  double min_phi = 1.0;
  std::size_t filled = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    for (std::size_t c = 2; c < 6; ++c) {
      ASSERT_FALSE(rows[k][c].empty()) << "row " << k;
      min_phi = std::min(min_phi, std::stod(rows[k][c]));
    }
    ++filled;
  }
  EXPECT_GT(filled, 1000u);
  EXPECT_GE(min_phi, -1e-10);
}

TEST(CmdGrid, DerivativesSumToZero) {
  const Outcome r = grid({"conv-quad", 21, "moment", true, "", 2});
  ASSERT_EQ(r.code, kOk);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows[0].size(), 14u);
  EXPECT_EQ(rows[0][6], "dphi1_dx");
  EXPECT_EQ(rows[0][10], "dphi1_dy");
  std::size_t checked = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    // an axis is left empty where neither one-sided neighbour is in the domain (sharp corners)
    for (std::size_t axis : {6u, 10u}) {
      if (rows[k][axis].empty()) continue;
      double s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += std::stod(rows[k][axis + i]);
      EXPECT_NEAR(s, 0.0, 1e-6);
      ++checked;
    }
  }
  EXPECT_GT(checked, 400u);
}

TEST(CmdGrid, OutputIndependentOfWorkers) {
  const Outcome one = grid({"conv-hex", 7, "moment", true, "", 1});
  const Outcome four = grid({"conv-hex", 7, "moment", true, "", 4});
  ASSERT_EQ(one.code, kOk);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(parse_csv(one.out)[0].size(), 3u + 8u + 24u);
}

TEST(CmdGrid, FailedPointsLeftEmpty) {
  // the closed-form oracle is undefined on the boundary
  const Outcome r = grid({"biunit-square", 3, "mvc-oracle", false, "", 1});
  ASSERT_EQ(r.code, kOk);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[1].size(), 6u);
  EXPECT_TRUE(rows[1][2].empty());
  EXPECT_EQ(rows[5][2], "0.25");
  EXPECT_NE(r.err.find("8 of 9"), std::string::npos) << r.err;
}

TEST(CmdGrid, WritesFile) {
  const std::string path = ::testing::TempDir() + "mcoords_grid.csv";
  std::ostringstream out, err;
  ASSERT_EQ(cmd_grid({"conv-quad", 5, "wachspress", false, path, 1}, out, err), kOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str().substr(0, 22), "x,y,phi1,phi2,phi3,phi");
  EXPECT_TRUE(out.str().empty());
  std::remove(path.c_str());
}

TEST(CmdGrid, Errors) {
  EXPECT_EQ(grid({"conv-quad", 1, "moment", false, "", 1}).code, kInputError);
  EXPECT_EQ(grid({"nonconv-quad", 5, "wachspress", false, "", 1}).code, kDomainError);
}

TEST(CmdCheck, BuiltinsPass) {
  for (const char* g : {"conv-quad", "nonconv-quad", "biunit-square", "conv-hex", "biunit-cube"}) {
    const Outcome r = check({g, 1000, 1, std::nullopt, "moment"});
    EXPECT_EQ(r.code, kOk) << g << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  const Outcome hex = check({"conv-hex", 300, 9, std::nullopt, "moment"});
  EXPECT_NE(hex.out.find("PASS facet_reduction"), std::string::npos);
  EXPECT_NE(hex.out.find("PASS sign_pattern"), std::string::npos);
}

TEST(CmdCheck, OtherMethods) {
  for (const char* m : {"wachspress", "wachspress-oracle", "mvc-oracle", "cramer"}) {
    const Outcome r = check({"conv-quad", 200, 3, std::nullopt, m});
    EXPECT_EQ(r.code, kOk) << m << "\n" << r.out;
  }
  EXPECT_EQ(check({data_file("interval.json"), 500, 3, std::nullopt, "moment"}).code, kOk);
}

TEST(CmdCheck, RefusesWachspressOnNonconvex) {
  const Outcome r = check({"nonconv-quad", 100, 1, std::nullopt, "wachspress"});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_NE(r.out.find("NotConvex"), std::string::npos);
}

TEST(CmdCheck, ToleranceOverrideAndDeterminism) {
  const Outcome strict = check({"conv-quad", 100, 1, 0.0, "moment"});
  EXPECT_EQ(strict.code, kPropertyFailure);
  EXPECT_NE(strict.out.find("FAIL"), std::string::npos);
  const Outcome a = check({"conv-hex", 100, 42, std::nullopt, "moment"});
  const Outcome b = check({"conv-hex", 100, 42, std::nullopt, "moment"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CheckInvariants, FlagsBadCoordinates) {
  const GeometrySpec g = load_geometry("biunit-square");
  const std::vector<double> x{0, 0};
  EXPECT_TRUE(satisfies(check_invariants(g, x, BaryCoords({0.25, 0.25, 0.25, 0.25})), {}));
  EXPECT_FALSE(satisfies(check_invariants(g, x, BaryCoords({0.5, 0.25, 0.25, 0.25})), {}));
  EXPECT_FALSE(satisfies(check_invariants(g, x, BaryCoords({0.5, 0.0, 0.5, 0.0})), {}) &&
               check_invariants(g, x, BaryCoords({0.5, 0.0, 0.5, 0.0})).precision_error > 0);
  EXPECT_FALSE(satisfies(check_invariants(g, x, BaryCoords({0.6, -0.1, 0.4, 0.1})), {}));
}

}  // namespace
}  // namespace mcoords::cli
