#include "ldfoe/physics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ldfoe/error.hpp"

namespace ldfoe {

namespace {

double kinetic_and_magnetic(const State& s) {
  const double ke = 0.5 * (s[var::mx] * s[var::mx] + s[var::my] * s[var::my] +
                           s[var::mz] * s[var::mz]) /
                    s[var::rho];
  const double me = 0.5 * (s[var::bx] * s[var::bx] + s[var::by] * s[var::by] +
                           s[var::bz] * s[var::bz]);
  return ke + me;
}

// Fast magnetosonic speed from a^2 = gamma p / rho, b^2 = |B|^2 / rho and
// b_n^2 = (B.n)^2 / rho.
double fast_speed(double a2, double b2, double bn2) {
  const double sum = a2 + b2;
  const double disc = std::max(sum * sum - 4.0 * a2 * bn2, 0.0);
  return std::sqrt(0.5 * (sum + std::sqrt(disc)));
}

}  // namespace

NonPositiveDensity::NonPositiveDensity(double rho)
    : Error("non-positive density rho=" + std::to_string(rho)), rho_(rho) {}

NegativePressure::NegativePressure(double p)
    : Error("negative pressure p=" + std::to_string(p)), p_(p) {}

NonFiniteResidual::NonFiniteResidual(int cell, int stage,
                                     const std::string& what)
    : Error("inadmissible state in residual at cell " + std::to_string(cell) +
            ", stage " + std::to_string(stage) + ": " + what),
      cell_(cell),
      stage_(stage) {}

NonFiniteSpeed::NonFiniteSpeed(int cell)
    : Error("non-finite wave speed at cell " + std::to_string(cell)),
      cell_(cell) {}

double pressure(const State& s, double gamma) {
  return (gamma - 1.0) * (s[var::ener] - kinetic_and_magnetic(s));
}

bool admissible(const State& s, double gamma) {
  const double rho = s[var::rho];
  if (!(rho > 0.0) || !std::isfinite(rho)) return false;
  const double p = pressure(s, gamma);
  return p >= 0.0 && std::isfinite(p);
}

Primitive cons_to_prim(const State& s, double gamma) {
  const double rho = s[var::rho];
  if (!(rho > 0.0) || !std::isfinite(rho)) throw NonPositiveDensity(rho);
  const double p = pressure(s, gamma);
  if (!(p >= 0.0) || !std::isfinite(p)) throw NegativePressure(p);
  Primitive pr;
  pr.rho = rho;
  pr.vel = {s[var::mx] / rho, s[var::my] / rho, s[var::mz] / rho};
  pr.pres = p;
  pr.mag = {s[var::bx], s[var::by], s[var::bz]};
  return pr;
}

State prim_to_cons(const Primitive& pr, double gamma) {
  if (!(pr.rho > 0.0) || !std::isfinite(pr.rho)) {
    throw NonPositiveDensity(pr.rho);
  }
  if (!(pr.pres >= 0.0) || !std::isfinite(pr.pres)) {
    throw NegativePressure(pr.pres);
  }
  const Vec3& u = pr.vel;
  const Vec3& b = pr.mag;
  State s{};
  s[var::rho] = pr.rho;
  s[var::mx] = pr.rho * u.x;
  s[var::my] = pr.rho * u.y;
  s[var::mz] = pr.rho * u.z;
  s[var::ener] = pr.pres / (gamma - 1.0) +
                 0.5 * pr.rho * (u.x * u.x + u.y * u.y + u.z * u.z) +
                 0.5 * (b.x * b.x + b.y * b.y + b.z * b.z);
  s[var::bx] = b.x;
  s[var::by] = b.y;
  s[var::bz] = b.z;
  return s;
}

FluxAndSpeed flux_and_speed_unchecked(const State& s, double gamma, Normal n) {
  const double rho = s[var::rho];
  const double inv_rho = 1.0 / rho;
  const double ux = s[var::mx] * inv_rho;
  const double uy = s[var::my] * inv_rho;
  const double uz = s[var::mz] * inv_rho;
  const double bx = s[var::bx];
  const double by = s[var::by];
  const double bz = s[var::bz];
  const double b2 = bx * bx + by * by + bz * bz;
  const double p = (gamma - 1.0) *
                   (s[var::ener] - 0.5 * rho * (ux * ux + uy * uy + uz * uz) -
                    0.5 * b2);
  const double ptot = p + 0.5 * b2;
  const double un = ux * n.x + uy * n.y;
  const double bn = bx * n.x + by * n.y;
  const double ub = ux * bx + uy * by + uz * bz;

  FluxAndSpeed out;
  State& f = out.flux;
  f[var::rho] = rho * un;
  f[var::mx] = s[var::mx] * un + ptot * n.x - bn * bx;
  f[var::my] = s[var::my] * un + ptot * n.y - bn * by;
  f[var::mz] = s[var::mz] * un - bn * bz;
  f[var::ener] = un * (s[var::ener] + ptot) - bn * ub;
  f[var::bx] = un * bx - bn * ux;
  f[var::by] = un * by - bn * uy;
  f[var::bz] = un * bz - bn * uz;

  const double a2 = gamma * std::max(p, 0.0) * inv_rho;
  out.speed = std::abs(un) + fast_speed(a2, b2 * inv_rho, bn * bn * inv_rho);
  return out;
}

void fluxes_xy_unchecked(const State& s, double gamma, State& fx, State& fy) {
  const double rho = s[var::rho];
  const double inv_rho = 1.0 / rho;
  const double ux = s[var::mx] * inv_rho;
  const double uy = s[var::my] * inv_rho;
  const double uz = s[var::mz] * inv_rho;
  const double bx = s[var::bx];
  const double by = s[var::by];
  const double bz = s[var::bz];
  const double b2 = bx * bx + by * by + bz * bz;
  const double p = (gamma - 1.0) *
                   (s[var::ener] - 0.5 * rho * (ux * ux + uy * uy + uz * uz) -
                    0.5 * b2);
  const double ptot = p + 0.5 * b2;
  const double ub = ux * bx + uy * by + uz * bz;
  const double eptot = s[var::ener] + ptot;

  fx[var::rho] = s[var::mx];
  fx[var::mx] = s[var::mx] * ux + ptot - bx * bx;
  fx[var::my] = s[var::my] * ux - bx * by;
  fx[var::mz] = s[var::mz] * ux - bx * bz;
  fx[var::ener] = ux * eptot - bx * ub;
  fx[var::bx] = ux * bx - bx * ux;
  fx[var::by] = ux * by - bx * uy;
  fx[var::bz] = ux * bz - bx * uz;

  fy[var::rho] = s[var::my];
  fy[var::mx] = s[var::mx] * uy - by * bx;
  fy[var::my] = s[var::my] * uy + ptot - by * by;
  fy[var::mz] = s[var::mz] * uy - by * bz;
  fy[var::ener] = uy * eptot - by * ub;
  fy[var::bx] = uy * bx - by * ux;
  fy[var::by] = uy * by - by * uy;
  fy[var::bz] = uy * bz - by * uz;
}

State normal_flux(const State& s, double gamma, Normal n) {
  cons_to_prim(s, gamma);
  return flux_and_speed_unchecked(s, gamma, n).flux;
}

State flux(const State& s, double gamma, Axis axis) {
  return normal_flux(s, gamma, axis == Axis::x ? Normal{1.0, 0.0}
                                               : Normal{0.0, 1.0});
}

double max_wave_speed(const State& s, double gamma, Normal n) {
  const Primitive pr = cons_to_prim(s, gamma);
  const Vec3& b = pr.mag;
  const double un = pr.vel.x * n.x + pr.vel.y * n.y;
  const double bn = b.x * n.x + b.y * n.y;
  const double a2 = gamma * pr.pres / pr.rho;
  const double b2 = (b.x * b.x + b.y * b.y + b.z * b.z) / pr.rho;
  return std::abs(un) + fast_speed(a2, b2, bn * bn / pr.rho);
}

}  // namespace ldfoe
