#ifndef LDFOE_DG_HPP_
#define LDFOE_DG_HPP_

#include <array>
#include <vector>

#include "ldfoe/basis.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/mesh.hpp"
#include "ldfoe/physics.hpp"
#include "ldfoe/quadrature.hpp"

namespace ldfoe {

/// Local Lax-Friedrichs flux across a face with unit normal n pointing from
/// uL to uR. The dissipation speed is the larger of the two fast-wave speeds.
State llf_flux(const State& uL, const State& uR, Normal n, double gamma);

// Quadrature tables shared by the DG right-hand side, the OE filter, and the
// diagnostics: basis values at volume points and at the points of each side.
struct CellQuadrature {
  CellQuadrature(const BasisSpec& basis, int points_per_axis);

  GaussRule edge;
  SquareRule volume;
  std::vector<BasisValues> volume_phi;
  // Reference-coordinate gradients (d/dX, d/dY) at the volume points.
  std::vector<BasisGradients> volume_dphi;
  // side_phi[side][g]: basis values at edge point g of that side, ordered
  // by increasing tangential coordinate.
  std::array<std::vector<BasisValues>, 4> side_phi;
};

/// Default per-axis point count for degree k: k + 1 (exact for every
/// mass-matrix product).
int default_quadrature_points(int degree);

// Semi-discrete right-hand side dU/dt = T_f(U) of the modal DG scheme.
// Interface fluxes are evaluated once per face and gathered by the two
// adjacent cells in a fixed order, so the result is independent of the
// worker count.
class DgOperator {
 public:
  DgOperator(const Mesh& mesh, const BasisSpec& basis, double gamma,
             int quad_points = 0, int workers = 1);

  const Mesh& mesh() const { return mesh_; }
  const BasisSpec& basis() const { return basis_; }
  const CellQuadrature& quadrature() const { return quad_; }
  double gamma() const { return gamma_; }
  int workers() const { return workers_; }

  /// Writes the modal rates into rates (same shape as u). stage is recorded
  /// in NonFiniteResidual for diagnostics.
  void residual(const ModalField& u, ModalField& rates, int stage = -1) const;
  ModalField residual(const ModalField& u, int stage = -1) const;

 private:
  void compute_x_faces(const ModalField& u, int stage,
                       std::vector<double>& out) const;
  void compute_y_faces(const ModalField& u, int stage,
                       std::vector<double>& out) const;

  Mesh mesh_;
  BasisSpec basis_;
  double gamma_;
  int workers_;
  CellQuadrature quad_;
  BasisValues mass_;
};

}  // namespace ldfoe

#endif  // LDFOE_DG_HPP_
