#ifndef LDFOE_DIAGNOSTICS_HPP_
#define LDFOE_DIAGNOSTICS_HPP_

#include <string>
#include <vector>

#include "ldfoe/cases.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/physics.hpp"

namespace ldfoe {

// All reductions below run sequentially in cell order, so results are
// reproducible bit for bit.

/// L2 error of conserved component `component` against an exact primitive
/// solution, integrated with the volume quadrature rule.
double l2_error(const ModalField& u, const ExactSolution& exact, double t,
                int component, double gamma, int quad_points = 0);

/// log2(e_{i-1} / e_i) for each consecutive pair. Throws NonPositiveError.
std::vector<double> convergence_order(const std::vector<double>& errors);

struct DivergenceReport {
  double max = 0.0;
  double l2 = 0.0;  // sqrt(integral of (div B)^2 / |Omega|)
};

/// dBx/dx + dBy/dy from the modal coefficients at every volume quadrature
/// point.
DivergenceReport divergence_report(const ModalField& u, int quad_points = 0);

/// Largest |B| over the volume quadrature points.
double max_b_magnitude(const ModalField& u, int quad_points = 0);

/// Sum over cells of area * cell average, per conserved component.
State conservation_audit(const ModalField& u);

struct Extrema {
  double min_rho = 0.0;
  double max_rho = 0.0;
  double min_p = 0.0;
  double max_p = 0.0;
  bool finite = true;
};

/// Density and pressure extrema at cell centers.
Extrema cell_center_extrema(const ModalField& u, double gamma);

}  // namespace ldfoe

#endif  // LDFOE_DIAGNOSTICS_HPP_
