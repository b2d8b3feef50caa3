#ifndef LDFOE_FIELD_HPP_
#define LDFOE_FIELD_HPP_

#include <span>
#include <vector>

#include "ldfoe/basis.hpp"
#include "ldfoe/mesh.hpp"
#include "ldfoe/physics.hpp"

namespace ldfoe {

// Modal degrees of freedom U_K^(alpha) for all eight conserved variables,
// stored [cell][mode][variable].
class ModalField {
 public:
  ModalField(const Mesh& mesh, const BasisSpec& basis);

  const Mesh& mesh() const { return mesh_; }
  const BasisSpec& basis() const { return basis_; }
  int num_cells() const { return mesh_.num_cells(); }
  int num_modes() const { return basis_.size(); }
  int stride() const { return basis_.size() * kNumVars; }

  double& at(int cell, int mode, int v) {
    return data_[(static_cast<std::size_t>(cell) * num_modes() + mode) * kNumVars + v];
  }
  double at(int cell, int mode, int v) const {
    return data_[(static_cast<std::size_t>(cell) * num_modes() + mode) * kNumVars + v];
  }

  std::span<double> cell(int c) {
    return {data_.data() + static_cast<std::size_t>(c) * stride(),
            static_cast<std::size_t>(stride())};
  }
  std::span<const double> cell(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * stride(),
            static_cast<std::size_t>(stride())};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  /// Cell average (the degree-0 coefficients).
  State average(int cell) const;

  /// Sum_alpha U^(alpha) phi^(alpha)(X, Y) in reference coordinates.
  State eval(int cell, double X, double Y) const;
  State eval(int cell, const BasisValues& phi) const {
    State s{};
    const double* c = data_.data() + static_cast<std::size_t>(cell) * stride();
    const int modes = num_modes();
    for (int m = 0; m < modes; ++m) {
      for (int v = 0; v < kNumVars; ++v) s[v] += c[m * kNumVars + v] * phi[m];
    }
    return s;
  }

  void fill(double value);
  /// Same mesh shape and basis.
  bool compatible(const ModalField& other) const;

 private:
  Mesh mesh_;
  BasisSpec basis_;
  std::vector<double> data_;
};

}  // namespace ldfoe

#endif  // LDFOE_FIELD_HPP_
