#include "ldfoe/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>

#include "ldfoe/error.hpp"
#include "ldfoe/ldf.hpp"
#include "ldfoe/snapshot.hpp"

namespace ldfoe {

namespace {

StepOptions step_options(const RunConfig& config) {
  StepOptions opt;
  opt.oe_enabled = config.oe_enabled;
  opt.ldf_enabled = config.ldf_enabled;
  opt.workers = config.workers;
  opt.quad_points = config.quad_points;
  return opt;
}

CaseSpec checked_case(const RunConfig& config) {
  validate(config);
  return make_case(config.case_name);
}

}  // namespace

Simulation::Simulation(const RunConfig& config)
    : config_(config),
      spec_(checked_case(config)),
      mesh_(spec_.make_mesh(config.nx, config.ny)),
      field_(init_field(spec_, mesh_, BasisSpec(config.k), config.quad_points)),
      stepper_(mesh_, BasisSpec(config.k), spec_.gamma, step_options(config)) {
  controls_.cfl = config.cfl;
  controls_.t_final = t_final();
  // The scheme advances a locally divergence-free field, so the projected
  // initial data is the starting point.
  if (config.ldf_enabled) stepper_.projector().apply(field_, config.workers);
  check_projected_state(field_, spec_, config.quad_points);
}

double Simulation::t_final() const {
  return config_.t_final ? *config_.t_final : spec_.t_final;
}

double Simulation::step(double until) {
  const double tau = compute_dt(field_, spec_.gamma, controls_, t_, until);
  stepper_.step(field_, tau);
  ++steps_;
  if (t_ + tau >= until) {
    t_ = until;
  } else {
    t_ += tau;
  }
  return tau;
}

void Simulation::advance_to(
    double t, const std::function<void(const Simulation&)>& after_step) {
  while (t_ < t) {
    step(t);
    if (after_step) after_step(*this);
  }
}

std::vector<ComponentError> table_errors(const ModalField& u,
                                         const CaseSpec& spec, double t,
                                         int quad_points) {
  std::vector<ComponentError> out;
  if (!spec.exact) return out;
  const std::pair<const char*, int> columns[] = {
      {"rho", var::rho}, {"rhoux", var::mx}, {"Bx", var::bx}, {"E", var::ener}};
  for (const auto& [name, comp] : columns) {
    out.push_back({name, comp,
                   l2_error(u, *spec.exact, t, comp, spec.gamma, quad_points)});
  }
  return out;
}

RunSummary run(const RunConfig& config, std::ostream* log) {
  const auto start = std::chrono::steady_clock::now();
  Simulation sim(config);
  const double t_end = sim.t_final();

  std::vector<double> targets;
  for (double t : config.snapshots) {
    if (t <= t_end) targets.push_back(t);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  RunSummary summary;
  summary.case_name = sim.spec().name;
  summary.nx = sim.mesh().nx();
  summary.ny = sim.mesh().ny();
  summary.k = config.k;
  summary.initial_totals = conservation_audit(sim.field());

  std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());

  auto snapshot = [&](std::size_t index) {
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%03zu.%s", sim.spec().name.c_str(),
                  index, to_string(config.format).c_str());
    const std::string path = (dir / name).string();
    write_snapshot(sim.field(), sim.gamma(), sim.time(), config.format, path,
                   sim.spec().name);
    summary.snapshot_files.push_back(path);
    if (log) *log << "snapshot t=" << sim.time() << " -> " << path << '\n';
  };

  std::size_t next = 0;
  while (next < targets.size() && targets[next] <= sim.time()) snapshot(next++);
  long reported = 0;
  while (sim.time() < t_end) {
    const double until = next < targets.size() ? targets[next] : t_end;
    sim.step(until);
    if (log && sim.steps() - reported >= 100) {
      reported = sim.steps();
      *log << "step " << sim.steps() << " t=" << sim.time() << '\n';
    }
    while (next < targets.size() && targets[next] <= sim.time()) snapshot(next++);
  }

  summary.steps = sim.steps();
  summary.t = sim.time();
  summary.divergence = divergence_report(sim.field(), config.quad_points);
  summary.max_b = max_b_magnitude(sim.field(), config.quad_points);
  summary.final_totals = conservation_audit(sim.field());
  summary.extrema = cell_center_extrema(sim.field(), sim.gamma());
  summary.errors = table_errors(sim.field(), sim.spec(), sim.time(), config.quad_points);
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string path = (dir / "summary.txt").string();
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_summary(out, summary);
  return summary;
}

void write_summary(std::ostream& out, const RunSummary& s) {
  static constexpr const char* kNames[kNumVars] = {"rho", "rhoux", "rhouy", "rhouz",
                                                   "E",   "Bx",    "By",    "Bz"};
  out << std::setprecision(17);
  out << "case = " << s.case_name << '\n'
      << "nx = " << s.nx << '\n'
      << "ny = " << s.ny << '\n'
      << "k = " << s.k << '\n'
      << "steps = " << s.steps << '\n'
      << "t = " << s.t << '\n'
      << "wall_seconds = " << s.wall_seconds << '\n'
      << "div_b_max = " << s.divergence.max << '\n'
      << "div_b_l2 = " << s.divergence.l2 << '\n'
      << "max_b = " << s.max_b << '\n'
      << "min_rho = " << s.extrema.min_rho << '\n'
      << "max_rho = " << s.extrema.max_rho << '\n'
      << "min_p = " << s.extrema.min_p << '\n'
      << "max_p = " << s.extrema.max_p << '\n';
  for (int v = 0; v < kNumVars; ++v) {
    out << "total_" << kNames[v] << " = " << s.final_totals[v] << '\n';
  }
  for (int v = 0; v < kNumVars; ++v) {
    out << "initial_total_" << kNames[v] << " = " << s.initial_totals[v] << '\n';
  }
  for (const auto& e : s.errors) out << "l2_error_" << e.name << " = " << e.error << '\n';
}

ConvergenceReport convergence_study(const RunConfig& base,
                                    const std::vector<int>& meshes,
                                    std::ostream* log) {
  ConvergenceReport report;
  report.case_name = base.case_name;
  report.k = base.k;
  if (!checked_case(base).exact) {
    throw ConfigError("case '" + base.case_name + "' has no exact solution");
  }
  for (int n : meshes) {
    RunConfig config = base;
    config.nx = config.ny = n;
    Simulation sim(config);
    const auto start = std::chrono::steady_clock::now();
    sim.advance_to(sim.t_final());
    report.t = sim.time();
    ConvergenceRow row;
    row.n = n;
    row.errors = table_errors(sim.field(), sim.spec(), sim.time(), config.quad_points);
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back().errors;
      for (std::size_t i = 0; i < row.errors.size(); ++i) {
        row.orders.push_back(
            convergence_order({prev[i].error, row.errors[i].error}).front());
      }
    } else {
      row.orders.assign(row.errors.size(), std::nullopt);
    }
    if (log) {
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      *log << n << "x" << n << ": " << sim.steps() << " steps, " << secs << " s\n";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report(std::ostream& out, const ConvergenceReport& report) {
  out << "# case=" << report.case_name << " k=" << report.k << " t=" << report.t << '\n';
  out << std::left << std::setw(10) << "mesh";
  if (!report.rows.empty()) {
    for (const auto& e : report.rows.front().errors) {
      out << std::setw(12) << (e.name + "_L2") << std::setw(8) << (e.name + "_ord");
    }
  }
  out << '\n';
  for (const auto& row : report.rows) {
    out << std::setw(10) << (std::to_string(row.n) + "x" + std::to_string(row.n));
    for (std::size_t i = 0; i < row.errors.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2E", row.errors[i].error);
      out << std::setw(12) << buf;
      if (row.orders[i]) {
        std::snprintf(buf, sizeof(buf), "%.2f", *row.orders[i]);
        out << std::setw(8) << buf;
      } else {
        out << std::setw(8) << "-";
      }
    }
    out << '\n';
  }
}

}  // namespace ldfoe
