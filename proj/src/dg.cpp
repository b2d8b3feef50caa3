#include "ldfoe/dg.hpp"

#include <algorithm>
#include <stdexcept>

#include "ldfoe/error.hpp"
#include "ldfoe/parallel.hpp"

namespace ldfoe {

namespace {

constexpr int kLeft = static_cast<int>(Side::left);
constexpr int kRight = static_cast<int>(Side::right);
constexpr int kBottom = static_cast<int>(Side::bottom);
constexpr int kTop = static_cast<int>(Side::top);

void check_state(const State& s, double gamma, int cell, int stage) {
  if (!admissible(s, gamma)) {
    const bool bad_rho = !(s[var::rho] > 0.0);
    throw NonFiniteResidual(
        cell, stage,
        bad_rho ? "rho=" + std::to_string(s[var::rho])
                : "p=" + std::to_string(pressure(s, gamma)));
  }
}

State evaluate(std::span<const double> coeffs, const BasisValues& phi,
               int modes) {
  State s{};
  for (int m = 0; m < modes; ++m) {
    const double w = phi[m];
    const double* c = coeffs.data() + m * kNumVars;
    for (int v = 0; v < kNumVars; ++v) s[v] += c[v] * w;
  }
  return s;
}

State llf_unchecked(const State& uL, const State& uR, Normal n, double gamma) {
  const FluxAndSpeed fl = flux_and_speed_unchecked(uL, gamma, n);
  const FluxAndSpeed fr = flux_and_speed_unchecked(uR, gamma, n);
  const double lambda = std::max(fl.speed, fr.speed);
  State f;
  for (int v = 0; v < kNumVars; ++v) {
    f[v] = 0.5 * (fl.flux[v] + fr.flux[v]) - 0.5 * lambda * (uR[v] - uL[v]);
  }
  return f;
}

}  // namespace

State llf_flux(const State& uL, const State& uR, Normal n, double gamma) {
  cons_to_prim(uL, gamma);
  cons_to_prim(uR, gamma);
  return llf_unchecked(uL, uR, n, gamma);
}

int default_quadrature_points(int degree) { return degree + 1; }

CellQuadrature::CellQuadrature(const BasisSpec& basis, int points_per_axis)
    : edge(gauss_legendre(points_per_axis)), volume(tensor_rule(edge)) {
  for (int q = 0; q < volume.size(); ++q) {
    volume_phi.push_back(basis.eval(volume.x[q], volume.y[q]));
    // hx = hy = 2 gives reference-coordinate derivatives.
    volume_dphi.push_back(basis.eval_grad(volume.x[q], volume.y[q], 2.0, 2.0));
  }
  for (int g = 0; g < edge.size(); ++g) {
    const double s = edge.nodes[g];
    side_phi[kLeft].push_back(basis.eval(-1.0, s));
    side_phi[kRight].push_back(basis.eval(1.0, s));
    side_phi[kBottom].push_back(basis.eval(s, -1.0));
    side_phi[kTop].push_back(basis.eval(s, 1.0));
  }
}

DgOperator::DgOperator(const Mesh& mesh, const BasisSpec& basis, double gamma,
                       int quad_points, int workers)
    : mesh_(mesh),
      basis_(basis),
      gamma_(gamma),
      workers_(std::max(workers, 1)),
      quad_(basis, quad_points > 0 ? quad_points
                                   : default_quadrature_points(basis.degree())),
      mass_(basis.mass_diagonal(mesh.hx(), mesh.hy())) {}

// x-face (i, j) with i in [0, nx] separates column i-1 from column i.
void DgOperator::compute_x_faces(const ModalField& u, int stage,
                                 std::vector<double>& out) const {
  const int nx = mesh_.nx();
  const int ny = mesh_.ny();
  const int nq = quad_.edge.size();
  const int modes = basis_.size();
  out.assign(static_cast<std::size_t>(nx + 1) * ny * nq * kNumVars, 0.0);
  parallel_for(ny, workers_, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      for (int i = 0; i <= nx; ++i) {
        const int left = i > 0 ? mesh_.index(i - 1, j)
                               : mesh_.neighbor(mesh_.index(0, j), Side::left);
        const int right = i < nx ? mesh_.index(i, j)
                                 : mesh_.neighbor(mesh_.index(nx - 1, j), Side::right);
        double* dst = out.data() +
                      (static_cast<std::size_t>(j) * (nx + 1) + i) * nq * kNumVars;
        for (int g = 0; g < nq; ++g) {
          const State uL = evaluate(u.cell(left), quad_.side_phi[kRight][g], modes);
          const State uR = evaluate(u.cell(right), quad_.side_phi[kLeft][g], modes);
          check_state(uL, gamma_, left, stage);
          check_state(uR, gamma_, right, stage);
          const State f = llf_unchecked(uL, uR, {1.0, 0.0}, gamma_);
          std::copy(f.begin(), f.end(), dst + g * kNumVars);
        }
      }
    }
  });
}

// y-face (i, j) with j in [0, ny] separates row j-1 from row j.
void DgOperator::compute_y_faces(const ModalField& u, int stage,
                                 std::vector<double>& out) const {
  const int nx = mesh_.nx();
  const int ny = mesh_.ny();
  const int nq = quad_.edge.size();
  const int modes = basis_.size();
  out.assign(static_cast<std::size_t>(ny + 1) * nx * nq * kNumVars, 0.0);
  parallel_for(ny + 1, workers_, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      for (int i = 0; i < nx; ++i) {
        const int below = j > 0 ? mesh_.index(i, j - 1)
                                : mesh_.neighbor(mesh_.index(i, 0), Side::bottom);
        const int above = j < ny ? mesh_.index(i, j)
                                 : mesh_.neighbor(mesh_.index(i, ny - 1), Side::top);
        double* dst = out.data() +
                      (static_cast<std::size_t>(j) * nx + i) * nq * kNumVars;
        for (int g = 0; g < nq; ++g) {
          const State uL = evaluate(u.cell(below), quad_.side_phi[kTop][g], modes);
          const State uR = evaluate(u.cell(above), quad_.side_phi[kBottom][g], modes);
          check_state(uL, gamma_, below, stage);
          check_state(uR, gamma_, above, stage);
          const State f = llf_unchecked(uL, uR, {0.0, 1.0}, gamma_);
          std::copy(f.begin(), f.end(), dst + g * kNumVars);
        }
      }
    }
  });
}

void DgOperator::residual(const ModalField& u, ModalField& rates,
                          int stage) const {
  if (!u.compatible(rates)) {
    throw std::invalid_argument("residual: rates field has a different shape");
  }
  std::vector<double> x_flux;
  std::vector<double> y_flux;
  compute_x_faces(u, stage, x_flux);
  compute_y_faces(u, stage, y_flux);

  const int nx = mesh_.nx();
  const int nq = quad_.edge.size();
  const int nvol = quad_.volume.size();
  const int modes = basis_.size();
  const double hx = mesh_.hx();
  const double hy = mesh_.hy();
  // d/dx = (2/hx) d/dX, so the volume term carries J * 2/hx = hy/2.
  const double vol_x = 0.5 * hy;
  const double vol_y = 0.5 * hx;
  const double edge_x = 0.5 * hy;  // length Jacobian of x-faces
  const double edge_y = 0.5 * hx;

  parallel_for(mesh_.num_cells(), workers_, [&](int c0, int c1) {
    State fx;
    State fy;
    for (int c = c0; c < c1; ++c) {
      const int i = mesh_.col(c);
      const int j = mesh_.row(c);
      const auto coeffs = u.cell(c);
      std::array<State, kMaxBasis> acc{};

      for (int q = 0; q < nvol; ++q) {
        const State s = evaluate(coeffs, quad_.volume_phi[q], modes);
        check_state(s, gamma_, c, stage);
        fluxes_xy_unchecked(s, gamma_, fx, fy);
        const double w = quad_.volume.weights[q];
        const BasisGradients& dphi = quad_.volume_dphi[q];
        for (int m = 1; m < modes; ++m) {
          const double ax = w * vol_x * dphi[m].x;
          const double ay = w * vol_y * dphi[m].y;
          for (int v = 0; v < kNumVars; ++v) acc[m][v] += ax * fx[v] + ay * fy[v];
        }
      }

      const double* left = x_flux.data() +
                            (static_cast<std::size_t>(j) * (nx + 1) + i) * nq * kNumVars;
      const double* right = left + nq * kNumVars;
      const double* bottom = y_flux.data() +
                             (static_cast<std::size_t>(j) * nx + i) * nq * kNumVars;
      const double* top = bottom + static_cast<std::size_t>(nx) * nq * kNumVars;
      for (int g = 0; g < nq; ++g) {
        const double wx = quad_.edge.weights[g] * edge_x;
        const double wy = quad_.edge.weights[g] * edge_y;
        for (int m = 0; m < modes; ++m) {
          const double pr = wx * quad_.side_phi[kRight][g][m];
          const double pl = wx * quad_.side_phi[kLeft][g][m];
          const double pt = wy * quad_.side_phi[kTop][g][m];
          const double pb = wy * quad_.side_phi[kBottom][g][m];
          for (int v = 0; v < kNumVars; ++v) {
            // Outward normal is -x on the left and -y on the bottom.
            acc[m][v] -= pr * right[g * kNumVars + v];
            acc[m][v] += pl * left[g * kNumVars + v];
            acc[m][v] -= pt * top[g * kNumVars + v];
            acc[m][v] += pb * bottom[g * kNumVars + v];
          }
        }
      }

      auto out = rates.cell(c);
      for (int m = 0; m < modes; ++m) {
        const double inv_mass = 1.0 / mass_[m];
        for (int v = 0; v < kNumVars; ++v) {
          out[m * kNumVars + v] = acc[m][v] * inv_mass;
        }
      }
    }
  });
}

ModalField DgOperator::residual(const ModalField& u, int stage) const {
  ModalField rates(u.mesh(), u.basis());
  residual(u, rates, stage);
  return rates;
}

}  // namespace ldfoe
