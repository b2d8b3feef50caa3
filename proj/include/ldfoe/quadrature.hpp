#ifndef LDFOE_QUADRATURE_HPP_
#define LDFOE_QUADRATURE_HPP_

#include <vector>

namespace ldfoe {

/// Gauss-Legendre rule on [-1, 1]. An n-point rule is exact for polynomials of
/// degree 2n-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

GaussRule gauss_legendre(int n);

// Tensor-product rule on the reference square [-1, 1]^2, x-index fastest.
struct SquareRule {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> weights;

  int size() const { return static_cast<int>(weights.size()); }
};

SquareRule tensor_rule(const GaussRule& rule);

}  // namespace ldfoe

#endif  // LDFOE_QUADRATURE_HPP_
