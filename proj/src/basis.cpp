#include "ldfoe/basis.hpp"

#include <stdexcept>

namespace ldfoe {

namespace {

constexpr std::array<std::pair<int, int>, kMaxBasis> kMultiIndex = {
    {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};

constexpr std::array<double, kMaxBasis> kReferenceNorm = {
    4.0, 4.0 / 3.0, 4.0 / 3.0, 16.0 / 45.0, 4.0 / 9.0, 16.0 / 45.0};

// Derivative of order a of the 1D factors {1, t, t^2 - 1/3} (indexed by power).
double factor_derivative(int power, int a, double t) {
  if (a == 0) {
    switch (power) {
      case 0: return 1.0;
      case 1: return t;
      default: return t * t - 1.0 / 3.0;
    }
  }
  if (a == 1) {
    switch (power) {
      case 0: return 0.0;
      case 1: return 1.0;
      default: return 2.0 * t;
    }
  }
  if (a == 2) return power == 2 ? 2.0 : 0.0;
  return 0.0;
}

}  // namespace

BasisSpec::BasisSpec(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw std::invalid_argument("basis degree must be in [0, 2]");
  }
  size_ = (degree + 1) * (degree + 2) / 2;
}

std::pair<int, int> BasisSpec::multi_index(int i) { return kMultiIndex[i]; }

int BasisSpec::mode_degree(int i) {
  return kMultiIndex[i].first + kMultiIndex[i].second;
}

std::pair<int, int> BasisSpec::degree_range(int j) {
  return {j * (j + 1) / 2, (j + 1) * (j + 2) / 2};
}

BasisValues BasisSpec::eval(double X, double Y) const {
  BasisValues v{};
  v[0] = 1.0;
  if (degree_ >= 1) {
    v[1] = X;
    v[2] = Y;
  }
  if (degree_ >= 2) {
    v[3] = X * X - 1.0 / 3.0;
    v[4] = X * Y;
    v[5] = Y * Y - 1.0 / 3.0;
  }
  return v;
}

BasisGradients BasisSpec::eval_grad(double X, double Y, double hx,
                                    double hy) const {
  BasisGradients g{};
  const double sx = 2.0 / hx;
  const double sy = 2.0 / hy;
  if (degree_ >= 1) {
    g[1] = {sx, 0.0};
    g[2] = {0.0, sy};
  }
  if (degree_ >= 2) {
    g[3] = {2.0 * X * sx, 0.0};
    g[4] = {Y * sx, X * sy};
    g[5] = {0.0, 2.0 * Y * sy};
  }
  return g;
}

BasisValues BasisSpec::eval_derivative(int a1, int a2, double X, double Y,
                                       double hx, double hy) const {
  BasisValues v{};
  double scale = 1.0;
  for (int i = 0; i < a1; ++i) scale *= 2.0 / hx;
  for (int i = 0; i < a2; ++i) scale *= 2.0 / hy;
  for (int i = 0; i < size_; ++i) {
    const auto [px, py] = kMultiIndex[i];
    v[i] = scale * factor_derivative(px, a1, X) * factor_derivative(py, a2, Y);
  }
  return v;
}

double BasisSpec::reference_norm(int i) { return kReferenceNorm[i]; }

BasisValues BasisSpec::mass_diagonal(double hx, double hy) const {
  BasisValues m{};
  const double jac = hx * hy / 4.0;
  for (int i = 0; i < size_; ++i) m[i] = jac * kReferenceNorm[i];
  return m;
}

}  // namespace ldfoe
