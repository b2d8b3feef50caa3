#include "ldfoe/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ldfoe/error.hpp"
#include "ldfoe/quadrature.hpp"

namespace ldfoe {

namespace {

SquareRule volume_rule(const ModalField& u, int quad_points) {
  const int n = quad_points > 0 ? quad_points : u.basis().degree() + 1;
  return tensor_rule(gauss_legendre(n));
}

}  // namespace

double l2_error(const ModalField& u, const ExactSolution& exact, double t,
                int component, double gamma, int quad_points) {
  const SquareRule rule = volume_rule(u, quad_points);
  const Mesh& mesh = u.mesh();
  const double jac = 0.25 * mesh.hx() * mesh.hy();
  double sum = 0.0;
  for (int c = 0; c < u.num_cells(); ++c) {
    const double xc = mesh.center_x(mesh.col(c));
    const double yc = mesh.center_y(mesh.row(c));
    for (int q = 0; q < rule.size(); ++q) {
      const double x = xc + 0.5 * mesh.hx() * rule.x[q];
      const double y = yc + 0.5 * mesh.hy() * rule.y[q];
      const State ref = prim_to_cons(exact(x, y, t), gamma);
      const double d = u.eval(c, rule.x[q], rule.y[q])[component] - ref[component];
      sum += rule.weights[q] * jac * d * d;
    }
  }
  return std::sqrt(sum);
}

std::vector<double> convergence_order(const std::vector<double>& errors) {
  for (double e : errors) {
    if (!(e > 0.0)) throw NonPositiveError("convergence_order: errors must be positive");
  }
  std::vector<double> orders;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    orders.push_back(std::log2(errors[i - 1] / errors[i]));
  }
  return orders;
}

DivergenceReport divergence_report(const ModalField& u, int quad_points) {
  const SquareRule rule = volume_rule(u, quad_points);
  const Mesh& mesh = u.mesh();
  const BasisSpec& basis = u.basis();
  std::vector<BasisGradients> grads;
  for (int q = 0; q < rule.size(); ++q) {
    grads.push_back(basis.eval_grad(rule.x[q], rule.y[q], mesh.hx(), mesh.hy()));
  }
  const double jac = 0.25 * mesh.hx() * mesh.hy();
  DivergenceReport rep;
  double sum = 0.0;
  for (int c = 0; c < u.num_cells(); ++c) {
    for (int q = 0; q < rule.size(); ++q) {
      double div = 0.0;
      for (int a = 0; a < basis.size(); ++a) {
        div += u.at(c, a, var::bx) * grads[q][a].x + u.at(c, a, var::by) * grads[q][a].y;
      }
      rep.max = std::max(rep.max, std::abs(div));
      sum += rule.weights[q] * jac * div * div;
    }
  }
  rep.l2 = std::sqrt(sum / mesh.domain().area());
  return rep;
}

double max_b_magnitude(const ModalField& u, int quad_points) {
  const SquareRule rule = volume_rule(u, quad_points);
  double out = 0.0;
  for (int c = 0; c < u.num_cells(); ++c) {
    for (int q = 0; q < rule.size(); ++q) {
      const State s = u.eval(c, rule.x[q], rule.y[q]);
      out = std::max(out, std::sqrt(s[var::bx] * s[var::bx] +
                                    s[var::by] * s[var::by] +
                                    s[var::bz] * s[var::bz]));
    }
  }
  return out;
}

State conservation_audit(const ModalField& u) {
  State total{};
  const double area = u.mesh().cell_area();
  for (int c = 0; c < u.num_cells(); ++c) {
    for (int v = 0; v < kNumVars; ++v) total[v] += area * u.at(c, 0, v);
  }
  return total;
}

Extrema cell_center_extrema(const ModalField& u, double gamma) {
  Extrema ex;
  ex.min_rho = ex.min_p = std::numeric_limits<double>::infinity();
  ex.max_rho = ex.max_p = -std::numeric_limits<double>::infinity();
  const BasisValues phi = u.basis().eval(0.0, 0.0);
  for (int c = 0; c < u.num_cells(); ++c) {
    const State s = u.eval(c, phi);
    const double p = pressure(s, gamma);
    if (!std::isfinite(s[var::rho]) || !std::isfinite(p)) ex.finite = false;
    ex.min_rho = std::min(ex.min_rho, s[var::rho]);
    ex.max_rho = std::max(ex.max_rho, s[var::rho]);
    ex.min_p = std::min(ex.min_p, p);
    ex.max_p = std::max(ex.max_p, p);
  }
  return ex;
}

}  // namespace ldfoe
