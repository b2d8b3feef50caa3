#ifndef LDFOE_CASES_HPP_
#define LDFOE_CASES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldfoe/basis.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/mesh.hpp"
#include "ldfoe/physics.hpp"

namespace ldfoe {

using Initializer = std::function<Primitive(double x, double y)>;
using ExactSolution = std::function<Primitive(double x, double y, double t)>;

struct CaseSpec {
  std::string name;
  Box domain;
  int nx = 0;
  int ny = 0;
  Boundary bc_x = Boundary::periodic;
  Boundary bc_y = Boundary::periodic;
  double gamma = kDefaultGamma;
  double t_final = 0.0;
  std::vector<double> snapshot_times;
  Initializer initial;
  std::optional<ExactSolution> exact;

  Mesh make_mesh(int nx_override = 0, int ny_override = 0) const;
};

/// vortex | orszag_tang | rotor | blast | loop | shock_cloud.
/// Throws ConfigError for anything else.
CaseSpec make_case(const std::string& name);
std::vector<std::string> case_names();

/// Smooth vortex advected by (1, 1) on the period-10 box.
Primitive exact_vortex(double x, double y, double t, double gamma);

/// L2 projection of the initial data onto the modal basis by volume
/// quadrature. Throws InadmissibleInitialData.
ModalField init_field(const CaseSpec& spec, const Mesh& mesh,
                      const BasisSpec& basis, int quad_points = 0);

/// Checks the projected initial state at every volume and face quadrature
/// point the residual evaluates. Throws InadmissibleInitialData naming the
/// first offending cell.
void check_projected_state(const ModalField& u, const CaseSpec& spec,
                           int quad_points = 0);

}  // namespace ldfoe

#endif  // LDFOE_CASES_HPP_
