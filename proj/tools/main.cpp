// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mcoords Authors
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace mcoords::cli;

  CLI::App app{"Moment, mean value and Wachspress coordinates on intervals, quadrilaterals and hexahedra"};
  app.require_subcommand(1);
  const std::string methods = "moment, wachspress, mvc-oracle, wachspress-oracle, cramer, hat";
  const std::string builtins = "file or builtin (biunit-square, conv-quad, nonconv-quad, conv-hex, biunit-cube)";

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate coordinates at one point and print JSON");
  eval_cmd->add_option("--geometry,-g", eval.geometry, builtins)->required();
  eval_cmd->add_option("--point,-p", eval.point, "comma-separated coordinates")->required();
  eval_cmd->add_option("--method,-m", eval.method, methods)->capture_default_str();

  GridOptions grid;
  grid.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* grid_cmd = app.add_subcommand("grid", "Sample the bounding box and write CSV");
  grid_cmd->add_option("--geometry,-g", grid.geometry, builtins)->required();
  grid_cmd->add_option("--resolution,-n", grid.resolution, "points per axis (>= 2)")->required();
  grid_cmd->add_option("--method,-m", grid.method, methods)->capture_default_str();
  grid_cmd->add_flag("--derivatives,-d", grid.derivatives, "append finite-difference gradients");
  grid_cmd->add_option("--out,-o", grid.out, "output path, '-' for stdout")->required();
  grid_cmd->add_option("--jobs,-j", grid.jobs, "worker threads")->capture_default_str();

  CheckOptions check;
  double tol = 0.0;
  auto* check_cmd = app.add_subcommand("check", "Run the property suite and report PASS/FAIL per property");
  check_cmd->add_option("--geometry,-g", check.geometry, builtins)->required();
  check_cmd->add_option("--samples,-k", check.samples, "random samples")->capture_default_str();
  check_cmd->add_option("--seed,-s", check.seed, "random seed")->capture_default_str();
  auto* tol_opt = check_cmd->add_option("--tol,-t", tol, "tolerance used for every property");
  check_cmd->add_option("--method,-m", check.method, methods)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*eval_cmd) return cmd_eval(eval, std::cout, std::cerr);
  if (*grid_cmd) return cmd_grid(grid, std::cout, std::cerr);
  if (tol_opt->count() > 0) check.tol = tol;
  return cmd_check(check, std::cout, std::cerr);
}
