#include "ldfoe/field.hpp"

#include <algorithm>

namespace ldfoe {

ModalField::ModalField(const Mesh& mesh, const BasisSpec& basis)
    : mesh_(mesh),
      basis_(basis),
      data_(static_cast<std::size_t>(mesh.num_cells()) * basis.size() * kNumVars,
            0.0) {}

State ModalField::average(int c) const {
  State s{};
  for (int v = 0; v < kNumVars; ++v) s[v] = at(c, 0, v);
  return s;
}

State ModalField::eval(int c, double X, double Y) const {
  return eval(c, basis_.eval(X, Y));
}

void ModalField::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

bool ModalField::compatible(const ModalField& other) const {
  return mesh_.nx() == other.mesh_.nx() && mesh_.ny() == other.mesh_.ny() &&
         basis_.degree() == other.basis_.degree();
}

}  // namespace ldfoe
