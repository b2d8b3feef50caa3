#ifndef LDFOE_PHYSICS_HPP_
#define LDFOE_PHYSICS_HPP_

#include <array>

namespace ldfoe {

inline constexpr int kNumVars = 8;

// Conserved variables (rho, rho*u_x, rho*u_y, rho*u_z, E, B_x, B_y, B_z).
// All three vector components are carried even though the mesh is 2D.
using State = std::array<double, kNumVars>;

namespace var {
inline constexpr int rho = 0;
inline constexpr int mx = 1;
inline constexpr int my = 2;
inline constexpr int mz = 3;
inline constexpr int ener = 4;
inline constexpr int bx = 5;
inline constexpr int by = 6;
inline constexpr int bz = 7;
}  // namespace var

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct Primitive {
  double rho = 1.0;
  Vec3 vel;
  double pres = 1.0;
  Vec3 mag;
};

// Unit normal in the x-y plane.
struct Normal {
  double x = 1.0;
  double y = 0.0;
};

enum class Axis { x, y };

inline constexpr double kDefaultGamma = 5.0 / 3.0;

/// Inverts E = p/(gamma-1) + rho|u|^2/2 + |B|^2/2.
/// Throws NonPositiveDensity or NegativePressure.
Primitive cons_to_prim(const State& s, double gamma);

State prim_to_cons(const Primitive& pr, double gamma);

/// Thermal pressure, no admissibility checks.
double pressure(const State& s, double gamma);

/// True when rho > 0 and p >= 0 and both are finite.
bool admissible(const State& s, double gamma);

/// Physical flux along one coordinate axis.
State flux(const State& s, double gamma, Axis axis);

/// F(s)·n for an in-plane unit normal.
State normal_flux(const State& s, double gamma, Normal n);

/// |u·n| + c_f, with c_f the fast magnetosonic speed along n.
double max_wave_speed(const State& s, double gamma, Normal n);

// Hot-path variants for the DG kernels. They assume the state was checked with
// admissible() and return the flux and the wave speed from one primitive pass.
struct FluxAndSpeed {
  State flux;
  double speed;
};
FluxAndSpeed flux_and_speed_unchecked(const State& s, double gamma, Normal n);
void fluxes_xy_unchecked(const State& s, double gamma, State& fx, State& fy);

}  // namespace ldfoe

#endif  // LDFOE_PHYSICS_HPP_
