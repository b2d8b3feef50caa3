// Command-line front end: `ldfoe solve ...` and `ldfoe converge ...`.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ldfoe/config.hpp"
#include "ldfoe/driver.hpp"
#include "ldfoe/error.hpp"

namespace {

struct Overrides {
  std::string config_file;
  std::string case_name;
  int nx = 0;
  int ny = 0;
  int k = 2;
  double cfl = 0.15;
  double t_final = 0.0;
  std::string snapshots;
  std::string format = "csv";
  std::string out = "out";
  bool no_oe = false;
  bool no_ldf = false;
  int workers = 1;
  int quad_points = 0;
  std::string meshes = "16,32,64";
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_file, "key = value configuration file");
  cmd->add_option("--case", o.case_name,
                  "vortex | orszag_tang | rotor | blast | loop | shock_cloud");
  cmd->add_option("--k", o.k, "polynomial degree (0..2)");
  cmd->add_option("--cfl", o.cfl, "CFL number");
  cmd->add_option("--t-final", o.t_final, "final time (case default if omitted)");
  cmd->add_flag("--no-oe", o.no_oe, "disable the oscillation-eliminating filter");
  cmd->add_flag("--no-ldf", o.no_ldf, "disable the divergence-free projection");
  cmd->add_option("--workers", o.workers, "worker threads");
  cmd->add_option("--quad-points", o.quad_points, "Gauss points per axis (default k+1)");
}

// File values first, then every flag given on the command line.
ldfoe::RunConfig build_config(CLI::App* cmd, const Overrides& o) {
  ldfoe::RunConfig config;
  if (!o.config_file.empty()) ldfoe::load_config_file(config, o.config_file);
  auto given = [cmd](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--case")) config.case_name = o.case_name;
  if (given("--nx")) config.nx = o.nx;
  if (given("--ny")) config.ny = o.ny;
  if (given("--k")) config.k = o.k;
  if (given("--cfl")) config.cfl = o.cfl;
  if (given("--t-final")) config.t_final = o.t_final;
  if (given("--snapshots")) config.snapshots = ldfoe::parse_time_list(o.snapshots);
  if (given("--format")) config.format = ldfoe::parse_format(o.format);
  if (given("--out")) config.out_dir = o.out;
  if (o.no_oe) config.oe_enabled = false;
  if (o.no_ldf) config.ldf_enabled = false;
  if (given("--workers")) config.workers = o.workers;
  if (given("--quad-points")) config.quad_points = o.quad_points;
  ldfoe::validate(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally divergence-free oscillation-eliminating DG solver for 2D ideal MHD"};
  app.require_subcommand(1);
  Overrides o;

  auto* solve = app.add_subcommand("solve", "run one case");
  add_common(solve, o);
  solve->add_option("--nx", o.nx, "cells along x");
  solve->add_option("--ny", o.ny, "cells along y");
  solve->add_option("--snapshots", o.snapshots, "comma-separated snapshot times");
  solve->add_option("--format", o.format, "csv | vtk");
  solve->add_option("--out", o.out, "output directory");

  auto* converge = app.add_subcommand("converge", "mesh-refinement study");
  add_common(converge, o);
  converge->add_option("--meshes", o.meshes, "comma-separated n for n-by-n meshes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const ldfoe::RunConfig config = build_config(solve, o);
      const ldfoe::RunSummary summary = ldfoe::run(config, &std::cerr);
      ldfoe::write_summary(std::cout, summary);
    } else {
      const ldfoe::RunConfig config = build_config(converge, o);
      const auto report =
          ldfoe::convergence_study(config, ldfoe::parse_int_list(o.meshes), &std::cerr);
      ldfoe::write_report(std::cout, report);
    }
  } catch (const ldfoe::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ldfoe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
