#ifndef LDFOE_OE_HPP_
#define LDFOE_OE_HPP_

#include <array>
#include <vector>

#include "ldfoe/basis.hpp"
#include "ldfoe/dg.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/mesh.hpp"
#include "ldfoe/physics.hpp"

namespace ldfoe {

// Domain average of each component and the L-infinity norm of its
// fluctuation, sampled at every volume and face quadrature point.
struct NormalizationCache {
  State average{};
  State fluctuation{};
  // True when the component is treated as globally constant (sigma = 0).
  std::array<bool, kNumVars> uniform{};
};

// Per-cell factors exp(-tau * sum_{m<=j} delta^m) for degree groups j=1..k.
struct DampingFactors {
  int degree = 0;
  std::vector<std::array<double, kMaxDegree>> factors;

  double at(int cell, int j) const { return factors[cell][j - 1]; }
};

using DampingCoefficients = std::array<double, kMaxDegree + 1>;

// Oscillation-eliminating filter: damps the modal coefficients of degree >= 1
// by the exact solution of the damping ODE. Cell averages are never touched.
class OscillationFilter {
 public:
  /// Relative threshold below which a component counts as globally constant.
  static constexpr double kUniformTolerance = 1e-14;

  OscillationFilter(const Mesh& mesh, const BasisSpec& basis, double gamma,
                    int quad_points = 0, int workers = 1);

  NormalizationCache normalization(const ModalField& u) const;

  /// Per-component sigma^m on one side of a cell.
  State face_sigma(const ModalField& u, int cell, Side side, int m,
                   const NormalizationCache& norm) const;

  /// delta_K^m, maximized over components.
  double delta(const ModalField& u, int cell, int m,
               const NormalizationCache& norm) const;

  /// delta_K^0..delta_K^k for one cell.
  DampingCoefficients deltas(const ModalField& u, int cell,
                             const NormalizationCache& norm) const;

  /// Factors for every cell. Face jumps are evaluated once per face and
  /// shared by the two adjacent cells.
  DampingFactors damping_factors(const ModalField& u, double tau) const;

  /// Multiplies every degree-j group by its factor. Degree-0 coefficients
  /// are left as they are.
  void apply(ModalField& u, const DampingFactors& factors) const;
  void apply(ModalField& u, double tau) const;

 private:
  using JumpSums = std::array<State, kMaxDegree + 1>;

  // Prefactor-weighted face averages of |jump of d^alpha u|, summed over
  // |alpha| = m, for the face between `lower` (on its right/top side) and
  // `upper`. Not yet divided by the fluctuation norm.
  JumpSums face_jumps(const ModalField& u, int lower, int upper,
                      bool x_face) const;
  JumpSums side_jumps(const ModalField& u, int cell, Side side) const;
  DampingCoefficients combine(const State& avg, const JumpSums& right,
                              const JumpSums& left, const JumpSums& top,
                              const JumpSums& bottom,
                              const NormalizationCache& norm) const;

  struct Term {
    int mode;
    double value;
  };
  // Nonzero derivative values, per side / edge point / multi-index.
  using SparseTable = std::vector<std::array<std::vector<Term>, kMaxBasis>>;

  Mesh mesh_;
  BasisSpec basis_;
  double gamma_;
  int workers_;
  CellQuadrature quad_;
  // deriv_[side][g][a]: physical derivative d^alpha of the modes at edge
  // point g of that side, alpha ranging over the multi-indices up to k.
  std::array<SparseTable, 4> deriv_;
  std::array<double, kMaxDegree + 1> x_prefactor_{};
  std::array<double, kMaxDegree + 1> y_prefactor_{};
};

/// exp(-tau * (delta^0 + ... + delta^j)) for j = 1..degree; unused slots are 1.
std::array<double, kMaxDegree> damping_factor_row(const DampingCoefficients& d,
                                                int degree, double tau);

/// Convenience wrapper: one OE pass with pseudo-time step tau.
void apply_oe(ModalField& u, double tau, double gamma, int workers = 1);

}  // namespace ldfoe

#endif  // LDFOE_OE_HPP_
