#include <cmath>
#include <random>

#include "doctest.h"
#include "ldfoe/cases.hpp"
#include "ldfoe/diagnostics.hpp"
#include "ldfoe/error.hpp"
#include "ldfoe/integrator.hpp"
#include "ldfoe/ldf.hpp"
#include "test_util.hpp"

using namespace ldfoe;
using ldfoe::testing::fill_constant;
using ldfoe::testing::random_admissible_state;

namespace {

constexpr double kGamma = 5.0 / 3.0;

// Textbook three-stage SSP Runge-Kutta step with no post-processing.
ModalField plain_ssprk3(const ModalField& u, double tau, const DgOperator& dg) {
  const std::size_t n = u.data().size();
  ModalField u1 = u;
  ModalField r = dg.residual(u);
  for (std::size_t i = 0; i < n; ++i) u1.data()[i] = u.data()[i] + tau * r.data()[i];
  ModalField u2 = u;
  r = dg.residual(u1);
  for (std::size_t i = 0; i < n; ++i) {
    u2.data()[i] = 0.75 * u.data()[i] + 0.25 * (u1.data()[i] + tau * r.data()[i]);
  }
  ModalField u3 = u;
  r = dg.residual(u2);
  for (std::size_t i = 0; i < n; ++i) {
    u3.data()[i] =
        (1.0 / 3.0) * u.data()[i] + (2.0 / 3.0) * (u2.data()[i] + tau * r.data()[i]);
  }
  return u3;
}

void check_totals(const State& a, const State& b, const State& scale, double tol) {
  for (int v = 0; v < kNumVars; ++v) {
    CAPTURE(v);
    CHECK(std::abs(a[v] - b[v]) <= tol * std::max(1.0, std::abs(scale[v])));
  }
}

}  // namespace

TEST_CASE("compute_dt on a static gas") {
  const Mesh mesh({0, 1, 0, 1}, 10, 10, Boundary::periodic, Boundary::periodic);
  ModalField u(mesh, BasisSpec(2));
  Primitive p;
  fill_constant(u, prim_to_cons(p, kGamma));
  const double lam = std::sqrt(5.0 / 3.0);
  const double tau = compute_dt(u, kGamma, {0.15, 100.0});
  CHECK(tau == doctest::Approx(0.15 / (2 * lam / 0.1)).epsilon(1e-15));
  CHECK(tau == doctest::Approx(0.15 * 0.1 / (2 * lam)).epsilon(1e-15));
  // Landing clip on t_final and on an intermediate target.
  CHECK(compute_dt(u, kGamma, {0.15, 1.0}, 1.0 - 1e-4) == doctest::Approx(1e-4));
  CHECK(compute_dt(u, kGamma, {0.15, 1.0}, 0.0, 0.001) == 0.001);
  const WaveSpeeds s = max_cell_speeds(u, kGamma);
  CHECK(s.x == doctest::Approx(lam));
  CHECK(s.y == doctest::Approx(lam));
}

TEST_CASE("compute_dt rejects inadmissible averages") {
  const Mesh mesh({0, 1, 0, 1}, 2, 2, Boundary::periodic, Boundary::periodic);
  ModalField u(mesh, BasisSpec(1));
  Primitive p;
  fill_constant(u, prim_to_cons(p, kGamma));
  u.at(3, 0, var::rho) = -1.0;
  try {
    compute_dt(u, kGamma, {0.15, 1.0});
    FAIL("expected NonFiniteSpeed");
  } catch (const NonFiniteSpeed& e) {
    CHECK(e.cell() == 3);
  }
}

TEST_CASE("constant field is a fixed point of the full step") {
  std::mt19937_64 rng(107);
  const Mesh mesh({0, 1, 0, 1}, 6, 6, Boundary::periodic, Boundary::periodic);
  const BasisSpec b(2);
  ModalField u(mesh, b);
  const State s = random_admissible_state(rng, kGamma);
  fill_constant(u, s);
  const ModalField before = u;
  const Stepper stepper(mesh, b, kGamma);
  stepper.step(u, compute_dt(u, kGamma, {0.15, 1.0}));
  for (std::size_t i = 0; i < u.data().size(); ++i) {
    CHECK(std::abs(u.data()[i] - before.data()[i]) <= 1e-13 * 10);
  }
}

TEST_CASE("zero step is the identity") {
  const CaseSpec spec = make_case("orszag_tang");
  const Mesh mesh = spec.make_mesh(12, 12);
  ModalField u = init_field(spec, mesh, BasisSpec(2));
  apply_ldf(u);
  const ModalField before = u;
  Stepper(mesh, u.basis(), spec.gamma).step(u, 0.0);
  for (std::size_t i = 0; i < u.data().size(); ++i) {
    CHECK(std::abs(u.data()[i] - before.data()[i]) <=
          1e-14 * std::max(1.0, std::abs(before.data()[i])));
  }
}

TEST_CASE("one vortex step conserves every total") {
  const CaseSpec spec = make_case("vortex");
  const Mesh mesh = spec.make_mesh(16, 16);
  ModalField u = init_field(spec, mesh, BasisSpec(2));
  apply_ldf(u);
  const State before = conservation_audit(u);
  Stepper(mesh, u.basis(), spec.gamma).step(u, compute_dt(u, spec.gamma, {0.15, 20.0}));
  const State after = conservation_audit(u);
  check_totals(after, before, before, 1e-12);
}

TEST_CASE("regression mode reproduces plain SSPRK3 bitwise") {
  const CaseSpec spec = make_case("orszag_tang");
  const Mesh mesh = spec.make_mesh(16, 16);
  const ModalField u0 = init_field(spec, mesh, BasisSpec(2));
  StepOptions opts;
  opts.force_zero_damping = true;
  opts.ldf_enabled = false;
  const Stepper stepper(mesh, u0.basis(), spec.gamma, opts);
  const double tau = compute_dt(u0, spec.gamma, {0.15, 1.0});
  ModalField u = u0;
  stepper.step(u, tau);
  const ModalField oracle = plain_ssprk3(u0, tau, stepper.dg());
  CHECK(u.data() == oracle.data());

  // Disabling OE altogether gives the same result.
  opts.oe_enabled = false;
  ModalField w = u0;
  Stepper(mesh, u0.basis(), spec.gamma, opts).step(w, tau);
  CHECK(w.data() == oracle.data());
}

TEST_CASE("full step is divergence-free and worker independent") {
  const CaseSpec spec = make_case("orszag_tang");
  const Mesh mesh = spec.make_mesh(16, 16);
  ModalField u = init_field(spec, mesh, BasisSpec(2));
  apply_ldf(u);
  ModalField w = u;
  StepOptions opts;
  const double tau = compute_dt(u, spec.gamma, {0.15, 1.0});
  Stepper(mesh, u.basis(), spec.gamma, opts).step(u, tau);
  opts.workers = 3;
  Stepper(mesh, w.basis(), spec.gamma, opts).step(w, tau);
  CHECK(u.data() == w.data());
  CHECK(divergence_report(u).max <= 1e-12 * max_b_magnitude(u));
}

TEST_CASE("negative density aborts the step with the stage index") {
  const Mesh mesh({0, 1, 0, 1}, 3, 3, Boundary::periodic, Boundary::periodic);
  const BasisSpec b(1);
  ModalField u(mesh, b);
  Primitive p;
  fill_constant(u, prim_to_cons(p, kGamma));
  u.at(4, 1, var::rho) = 5.0;  // rho = 1 + 5X goes negative inside the cell
  try {
    Stepper(mesh, b, kGamma).step(u, 1e-3);
    FAIL("expected NonFiniteResidual");
  } catch (const NonFiniteResidual& e) {
    CHECK(e.stage() == 1);
    CHECK(e.cell() >= 0);
  }
}
