#ifndef LDFOE_DRIVER_HPP_
#define LDFOE_DRIVER_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ldfoe/cases.hpp"
#include "ldfoe/config.hpp"
#include "ldfoe/diagnostics.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/integrator.hpp"

namespace ldfoe {

// One case on one mesh: the field, its clock, and the stepper.
class Simulation {
 public:
  explicit Simulation(const RunConfig& config);

  const RunConfig& config() const { return config_; }
  const CaseSpec& spec() const { return spec_; }
  const Mesh& mesh() const { return mesh_; }
  const ModalField& field() const { return field_; }
  ModalField& field() { return field_; }
  const Stepper& stepper() const { return stepper_; }
  double gamma() const { return spec_.gamma; }
  double time() const { return t_; }
  long steps() const { return steps_; }
  double t_final() const;

  /// One step, clipped so that the clock lands exactly on `until`.
  /// Returns the step size.
  double step(double until);

  /// Steps until the clock reaches t. after_step runs after every step.
  void advance_to(double t,
                  const std::function<void(const Simulation&)>& after_step = {});

 private:
  RunConfig config_;
  CaseSpec spec_;
  Mesh mesh_;
  ModalField field_;
  Stepper stepper_;
  StepControls controls_;
  double t_ = 0.0;
  long steps_ = 0;
};

struct ComponentError {
  std::string name;
  int component;
  double error;
};

struct RunSummary {
  std::string case_name;
  int nx = 0;
  int ny = 0;
  int k = 0;
  long steps = 0;
  double t = 0.0;
  double wall_seconds = 0.0;
  DivergenceReport divergence;
  double max_b = 0.0;
  State initial_totals{};
  State final_totals{};
  Extrema extrema;
  std::vector<ComponentError> errors;  // only for cases with an exact solution
  std::vector<std::string> snapshot_files;
};

/// Columns of the vortex accuracy table: rho, rho*u_x, B_x, E.
std::vector<ComponentError> table_errors(const ModalField& u,
                                         const CaseSpec& spec, double t,
                                         int quad_points = 0);

/// Runs a case to its final time, writing snapshots and <out>/summary.txt.
/// log, when given, receives progress lines.
RunSummary run(const RunConfig& config, std::ostream* log = nullptr);

void write_summary(std::ostream& out, const RunSummary& summary);

struct ConvergenceRow {
  int n = 0;
  std::vector<ComponentError> errors;
  std::vector<std::optional<double>> orders;
};

struct ConvergenceReport {
  std::string case_name;
  int k = 2;
  double t = 0.0;
  std::vector<ConvergenceRow> rows;
};

/// Runs the case on n-by-n meshes and tabulates L2 errors and observed orders.
ConvergenceReport convergence_study(const RunConfig& base,
                                    const std::vector<int>& meshes,
                                    std::ostream* log = nullptr);

/// Plain-text table: mesh, then error and order per component.
void write_report(std::ostream& out, const ConvergenceReport& report);

}  // namespace ldfoe

#endif  // LDFOE_DRIVER_HPP_
