#include "ldfoe/cases.hpp"

#include <cmath>
#include <numbers>

#include "ldfoe/error.hpp"
#include "ldfoe/quadrature.hpp"

namespace ldfoe {

namespace {

constexpr double kPi = std::numbers::pi;

Primitive vortex_profile(double x, double y) {
  const double r2 = x * x + y * y;
  const double amp = std::exp(0.5 * (1.0 - r2)) / (2.0 * kPi);
  Primitive pr;
  pr.rho = 1.0;
  pr.vel = {1.0 - amp * y, 1.0 + amp * x, 0.0};
  pr.mag = {-amp * y, amp * x, 0.0};
  pr.pres = 1.0 - r2 / (8.0 * kPi * kPi) * std::exp(1.0 - r2);
  return pr;
}

double wrap(double v, double lo, double period) {
  return v - period * std::floor((v - lo) / period);
}

CaseSpec vortex() {
  CaseSpec c;
  c.name = "vortex";
  c.domain = {-5.0, 5.0, -5.0, 5.0};
  c.nx = c.ny = 32;
  c.t_final = 20.0;
  c.initial = vortex_profile;
  c.exact = [gamma = c.gamma](double x, double y, double t) {
    return exact_vortex(x, y, t, gamma);
  };
  return c;
}

CaseSpec orszag_tang() {
  CaseSpec c;
  c.name = "orszag_tang";
  c.domain = {0.0, 2.0 * kPi, 0.0, 2.0 * kPi};
  c.nx = c.ny = 192;
  c.t_final = 4.0;
  c.snapshot_times = {0.5, 2.0, 3.0, 4.0};
  c.initial = [gamma = c.gamma](double x, double y) {
    Primitive pr;
    pr.rho = gamma * gamma;
    pr.vel = {-std::sin(y), std::sin(x), 0.0};
    pr.mag = {-std::sin(y), std::sin(2.0 * x), 0.0};
    pr.pres = gamma;
    return pr;
  };
  return c;
}

CaseSpec rotor() {
  CaseSpec c;
  c.name = "rotor";
  c.domain = {0.0, 1.0, 0.0, 1.0};
  c.nx = c.ny = 200;
  c.t_final = 0.295;
  c.initial = [](double x, double y) {
    constexpr double r0 = 0.1;
    constexpr double r1 = 0.115;
    const double dx = x - 0.5;
    const double dy = y - 0.5;
    const double r = std::sqrt(dx * dx + dy * dy);
    Primitive pr;
    if (r <= r0) {
      pr.rho = 10.0;
      pr.vel = {-dy / r0, dx / r0, 0.0};
    } else if (r < r1) {
      const double f = (r1 - r) / (r1 - r0);
      pr.rho = 1.0 + 9.0 * f;
      pr.vel = {-f * dy / r, f * dx / r, 0.0};
    } else {
      pr.rho = 1.0;
    }
    pr.mag = {2.5 / std::sqrt(4.0 * kPi), 0.0, 0.0};
    pr.pres = 0.5;
    return pr;
  };
  return c;
}

CaseSpec blast() {
  CaseSpec c;
  c.name = "blast";
  c.domain = {-0.5, 0.5, -0.5, 0.5};
  c.nx = c.ny = 200;
  c.bc_x = c.bc_y = Boundary::outflow;
  c.gamma = 1.4;
  c.t_final = 0.01;
  c.initial = [](double x, double y) {
    Primitive pr;
    pr.rho = 1.0;
    pr.mag = {100.0 / std::sqrt(4.0 * kPi), 0.0, 0.0};
    pr.pres = std::sqrt(x * x + y * y) <= 0.1 ? 1000.0 : 0.1;
    return pr;
  };
  return c;
}

CaseSpec loop() {
  CaseSpec c;
  c.name = "loop";
  c.domain = {-1.0, 1.0, -0.5, 0.5};
  c.nx = 200;
  c.ny = 100;
  c.t_final = 10.0;
  c.snapshot_times = {0.0, 2.0, 10.0};
  c.initial = [](double x, double y) {
    constexpr double a0 = 1e-3;
    constexpr double radius = 0.3;
    const double r = std::sqrt(x * x + y * y);
    Primitive pr;
    pr.rho = 1.0;
    pr.vel = {2.0, 1.0, 0.0};
    pr.pres = 1.0;
    // B = curl(0, 0, A_z) with A_z = A0 (R - r) inside the loop.
    if (r > 0.0 && r <= radius) pr.mag = {-a0 * y / r, a0 * x / r, 0.0};
    return pr;
  };
  return c;
}

CaseSpec shock_cloud() {
  CaseSpec c;
  c.name = "shock_cloud";
  c.domain = {0.0, 2.0, 0.0, 1.0};
  c.nx = 600;
  c.ny = 300;
  c.bc_x = c.bc_y = Boundary::outflow;
  c.t_final = 0.6;
  c.initial = [](double x, double y) {
    Primitive pr;
    if (x <= 1.2) {
      pr.rho = 3.88968;
      pr.vel = {0.0, 0.0, -0.05234};
      pr.mag = {1.0, 0.0, 3.9353};
      pr.pres = 14.2641;
      return pr;
    }
    const double d = std::hypot(x - 1.4, y - 0.5);
    pr.rho = d < 0.18 ? 5.0 : 1.0;
    pr.vel = {-3.3156, 0.0, 0.0};
    pr.mag = {1.0, 0.0, 1.0};
    pr.pres = 0.04;
    return pr;
  };
  return c;
}

}  // namespace

Mesh CaseSpec::make_mesh(int nx_override, int ny_override) const {
  return Mesh(domain, nx_override > 0 ? nx_override : nx,
              ny_override > 0 ? ny_override : ny, bc_x, bc_y);
}

std::vector<std::string> case_names() {
  return {"vortex", "orszag_tang", "rotor", "blast", "loop", "shock_cloud"};
}

CaseSpec make_case(const std::string& name) {
  if (name == "vortex") return vortex();
  if (name == "orszag_tang") return orszag_tang();
  if (name == "rotor") return rotor();
  if (name == "blast") return blast();
  if (name == "loop") return loop();
  if (name == "shock_cloud") return shock_cloud();
  throw ConfigError("unknown case '" + name + "'");
}

Primitive exact_vortex(double x, double y, double t, double /*gamma*/) {
  // The profile is carried by the mean velocity (1, 1) across the
  // period-10 box.
  return vortex_profile(wrap(x - t, -5.0, 10.0), wrap(y - t, -5.0, 10.0));
}

ModalField init_field(const CaseSpec& spec, const Mesh& mesh,
                      const BasisSpec& basis, int quad_points) {
  const int n = quad_points > 0 ? quad_points : basis.degree() + 1;
  const SquareRule rule = tensor_rule(gauss_legendre(n));
  std::vector<BasisValues> phi;
  for (int q = 0; q < rule.size(); ++q) phi.push_back(basis.eval(rule.x[q], rule.y[q]));

  ModalField field(mesh, basis);
  for (int c = 0; c < mesh.num_cells(); ++c) {
    const double xc = mesh.center_x(mesh.col(c));
    const double yc = mesh.center_y(mesh.row(c));
    std::array<State, kMaxBasis> acc{};
    for (int q = 0; q < rule.size(); ++q) {
      const double x = xc + 0.5 * mesh.hx() * rule.x[q];
      const double y = yc + 0.5 * mesh.hy() * rule.y[q];
      State u;
      try {
        u = prim_to_cons(spec.initial(x, y), spec.gamma);
      } catch (const Error& e) {
        throw InadmissibleInitialData(spec.name + " at (" + std::to_string(x) +
                                      ", " + std::to_string(y) + "): " + e.what());
      }
      for (int a = 0; a < basis.size(); ++a) {
        const double w = rule.weights[q] * phi[q][a];
        for (int v = 0; v < kNumVars; ++v) acc[a][v] += w * u[v];
      }
    }
    for (int a = 0; a < basis.size(); ++a) {
      const double inv = 1.0 / BasisSpec::reference_norm(a);
      for (int v = 0; v < kNumVars; ++v) field.at(c, a, v) = acc[a][v] * inv;
    }
  }
  return field;
}

void check_projected_state(const ModalField& u, const CaseSpec& spec,
                           int quad_points) {
  const int n = quad_points > 0 ? quad_points : u.basis().degree() + 1;
  const GaussRule g = gauss_legendre(n);
  std::vector<std::pair<double, double>> points;
  for (double a : g.nodes) {
    for (double b : g.nodes) points.emplace_back(a, b);
    points.insert(points.end(), {{-1.0, a}, {1.0, a}, {a, -1.0}, {a, 1.0}});
  }
  std::vector<BasisValues> phi;
  for (const auto& [X, Y] : points) phi.push_back(u.basis().eval(X, Y));

  const Mesh& mesh = u.mesh();
  for (int c = 0; c < mesh.num_cells(); ++c) {
    for (std::size_t q = 0; q < points.size(); ++q) {
      try {
        cons_to_prim(u.eval(c, phi[q]), spec.gamma);
      } catch (const Error& e) {
        const double x = mesh.center_x(mesh.col(c)) + 0.5 * mesh.hx() * points[q].first;
        const double y = mesh.center_y(mesh.row(c)) + 0.5 * mesh.hy() * points[q].second;
        throw InadmissibleInitialData(
            spec.name + " projected state, cell " + std::to_string(c) + " at (" +
            std::to_string(x) + ", " + std::to_string(y) + "): " + e.what());
      }
    }
  }
}

}  // namespace ldfoe
