#ifndef LDFOE_INTEGRATOR_HPP_
#define LDFOE_INTEGRATOR_HPP_

#include <limits>

#include "ldfoe/dg.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/ldf.hpp"
#include "ldfoe/oe.hpp"

namespace ldfoe {

struct StepControls {
  double cfl = 0.15;
  double t_final = 0.0;
  long max_steps = std::numeric_limits<long>::max();
};

struct WaveSpeeds {
  double x = 0.0;
  double y = 0.0;
};

/// Global maxima over cells of the fast-wave speed at the cell averages.
WaveSpeeds max_cell_speeds(const ModalField& u, double gamma);

/// tau = CFL / (lambda_x/h_x + lambda_y/h_y), clipped so that t + tau does
/// not pass `until` (pass controls.t_final unless a snapshot comes first).
double compute_dt(const ModalField& u, double gamma, const StepControls& controls,
                  double t, double until);
double compute_dt(const ModalField& u, double gamma, const StepControls& controls,
                  double t = 0.0);

struct StepOptions {
  bool oe_enabled = true;
  bool ldf_enabled = true;
  // Runs the OE pass with every delta forced to zero (identity factors).
  // Used to check that the filtered scheme reduces to plain SSPRK3-DG.
  bool force_zero_damping = false;
  int workers = 1;
  int quad_points = 0;
};

// Three-stage SSP Runge-Kutta step; after each stage update the OE filter
// (pseudo-time step tau) and then the divergence-free projection are applied.
class Stepper {
 public:
  Stepper(const Mesh& mesh, const BasisSpec& basis, double gamma,
          StepOptions options = {});

  const DgOperator& dg() const { return dg_; }
  const OscillationFilter& filter() const { return oe_; }
  const LdfProjector& projector() const { return ldf_; }
  const StepOptions& options() const { return options_; }

  void step(ModalField& u, double tau) const;

 private:
  void post_process(ModalField& u, double tau) const;

  double gamma_;
  StepOptions options_;
  DgOperator dg_;
  OscillationFilter oe_;
  LdfProjector ldf_;
};

}  // namespace ldfoe

#endif  // LDFOE_INTEGRATOR_HPP_
