#ifndef LDFOE_LDF_HPP_
#define LDFOE_LDF_HPP_

#include <array>
#include <span>
#include <vector>

#include "ldfoe/basis.hpp"
#include "ldfoe/field.hpp"

namespace ldfoe {

inline constexpr int kMaxDfModes = 9;

// A divergence-free vector polynomial written in the scalar modal basis:
// psi = (sum_a bx[a] phi_a, sum_a by[a] phi_a).
struct DfMode {
  BasisValues bx{};
  BasisValues by{};
};

// Orthogonal divergence-free basis psi^(1..n) on an hx-by-hy rectangle;
// n = 2, 5, 9 for k = 0, 1, 2.
struct DfBasis {
  std::vector<DfMode> modes;
  // Integral of psi.psi over [-1, 1]^2 (physical norms scale by hx*hy/4).
  std::vector<double> reference_norms;
};

DfBasis df_basis(const BasisSpec& basis, double hx, double hy);

// L2 projection of the in-plane magnetic field onto the divergence-free
// subspace, precomputed as a (2n x 2n) linear map on scalar modal
// coefficients [Bx modes..., By modes...].
class LdfProjector {
 public:
  LdfProjector(const BasisSpec& basis, double hx, double hy);

  const DfBasis& df() const { return df_; }
  int size() const { return 2 * modes_; }
  double matrix(int row, int col) const { return map_[row * size() + col]; }

  /// Coefficients B^(l) on the divergence-free basis.
  std::vector<double> df_coefficients(std::span<const double> bx,
                                      std::span<const double> by) const;

  /// Projects in place.
  void project(std::span<double> bx, std::span<double> by) const;

  /// Replaces (B_x, B_y) of every cell by its projection. B_z and the flow
  /// variables are untouched.
  void apply(ModalField& u, int workers = 1) const;

 private:
  int modes_;
  DfBasis df_;
  std::vector<double> map_;
};

/// Closed-form projection: coefficients on the divergence-free basis.
std::vector<double> project_ldf(const BasisSpec& basis,
                                std::span<const double> bx,
                                std::span<const double> by, double hx,
                                double hy);

void apply_ldf(ModalField& u, int workers = 1);

}  // namespace ldfoe

#endif  // LDFOE_LDF_HPP_
