#ifndef LDFOE_BASIS_HPP_
#define LDFOE_BASIS_HPP_

#include <array>
#include <utility>

namespace ldfoe {

inline constexpr int kMaxDegree = 2;
inline constexpr int kMaxBasis = 6;

using BasisValues = std::array<double, kMaxBasis>;

struct Gradient {
  double x = 0.0;
  double y = 0.0;
};
using BasisGradients = std::array<Gradient, kMaxBasis>;

// Orthogonal modal basis on a rectangle in reference coordinates
// X = (x - x_K)/(h_x/2), Y = (y - y_K)/(h_y/2):
//   1, X, Y, X^2 - 1/3, XY, Y^2 - 1/3
// truncated to total degree k. Modes of equal degree are contiguous.
class BasisSpec {
 public:
  explicit BasisSpec(int degree);

  int degree() const { return degree_; }
  int size() const { return size_; }

  /// Multi-index (a1, a2) of mode i.
  static std::pair<int, int> multi_index(int i);
  static int mode_degree(int i);
  /// Index range [first, last) of modes with total degree j.
  static std::pair<int, int> degree_range(int j);

  BasisValues eval(double X, double Y) const;
  /// Physical gradients through the chain rule d/dx = (2/h_x) d/dX.
  BasisGradients eval_grad(double X, double Y, double hx, double hy) const;

  /// Physical derivative d^(a1+a2)/dx^a1 dy^a2 of every mode.
  BasisValues eval_derivative(int a1, int a2, double X, double Y, double hx,
                              double hy) const;

  /// Integral of phi_i^2 over [-1, 1]^2.
  static double reference_norm(int i);
  /// Integral of phi_i^2 over a physical hx-by-hy cell.
  BasisValues mass_diagonal(double hx, double hy) const;

 private:
  int degree_;
  int size_;
};

}  // namespace ldfoe

#endif  // LDFOE_BASIS_HPP_
