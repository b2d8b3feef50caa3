#include "ldfoe/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ldfoe/error.hpp"

namespace ldfoe {

WaveSpeeds max_cell_speeds(const ModalField& u, double gamma) {
  WaveSpeeds speeds;
  for (int c = 0; c < u.num_cells(); ++c) {
    const State avg = u.average(c);
    double sx = 0.0;
    double sy = 0.0;
    try {
      sx = max_wave_speed(avg, gamma, {1.0, 0.0});
      sy = max_wave_speed(avg, gamma, {0.0, 1.0});
    } catch (const Error&) {
      throw NonFiniteSpeed(c);
    }
    if (!std::isfinite(sx) || !std::isfinite(sy)) throw NonFiniteSpeed(c);
    speeds.x = std::max(speeds.x, sx);
    speeds.y = std::max(speeds.y, sy);
  }
  return speeds;
}

double compute_dt(const ModalField& u, double gamma,
                  const StepControls& controls, double t, double until) {
  const WaveSpeeds s = max_cell_speeds(u, gamma);
  const double rate = s.x / u.mesh().hx() + s.y / u.mesh().hy();
  double tau = rate > 0.0 ? controls.cfl / rate
                          : std::numeric_limits<double>::infinity();
  if (t + tau >= until) tau = until - t;
  return tau;
}

double compute_dt(const ModalField& u, double gamma,
                  const StepControls& controls, double t) {
  return compute_dt(u, gamma, controls, t, controls.t_final);
}

Stepper::Stepper(const Mesh& mesh, const BasisSpec& basis, double gamma,
                 StepOptions options)
    : gamma_(gamma),
      options_(options),
      dg_(mesh, basis, gamma, options.quad_points, options.workers),
      oe_(mesh, basis, gamma, options.quad_points, options.workers),
      ldf_(basis, mesh.hx(), mesh.hy()) {}

void Stepper::post_process(ModalField& u, double tau) const {
  if (options_.oe_enabled) {
    if (options_.force_zero_damping) {
      DampingFactors identity;
      identity.degree = u.basis().degree();
      identity.factors.assign(u.num_cells(), {});
      for (auto& f : identity.factors) f.fill(std::exp(-tau * 0.0));
      oe_.apply(u, identity);
    } else {
      oe_.apply(u, tau);
    }
  }
  if (options_.ldf_enabled) ldf_.apply(u, options_.workers);
}

void Stepper::step(ModalField& u, double tau) const {
  // U^{n,s} = a_s U^n + c_s (U^{n,s-1} + tau T_f(U^{n,s-1})), a_s = 1 - c_s.
  static constexpr double kOld[3] = {0.0, 3.0 / 4.0, 1.0 / 3.0};
  static constexpr double kNew[3] = {1.0, 1.0 / 4.0, 2.0 / 3.0};

  const ModalField base = u;
  ModalField stage = u;
  ModalField rates(u.mesh(), u.basis());
  for (int s = 0; s < 3; ++s) {
    dg_.residual(stage, rates, s + 1);
    auto& w = stage.data();
    const auto& r = rates.data();
    const auto& b = base.data();
    if (s == 0) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] + tau * r[i];
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = kOld[s] * b[i] + kNew[s] * (w[i] + tau * r[i]);
      }
    }
    post_process(stage, tau);
  }
  u = std::move(stage);
}

}  // namespace ldfoe
