#include "ldfoe/mesh.hpp"

#include <stdexcept>

namespace ldfoe {

Mesh::Mesh(Box domain, int nx, int ny, Boundary bc_x, Boundary bc_y)
    : domain_(domain), nx_(nx), ny_(ny), bc_x_(bc_x), bc_y_(bc_y) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("mesh needs nx, ny >= 1");
  if (!(domain.x_hi > domain.x_lo) || !(domain.y_hi > domain.y_lo)) {
    throw std::invalid_argument("mesh domain is empty");
  }
  hx_ = (domain.x_hi - domain.x_lo) / nx;
  hy_ = (domain.y_hi - domain.y_lo) / ny;
}

int Mesh::neighbor(int cell, Side side) const {
  const int i = col(cell);
  const int j = row(cell);
  switch (side) {
    case Side::left:
      if (i > 0) return cell - 1;
      return bc_x_ == Boundary::periodic ? index(nx_ - 1, j) : cell;
    case Side::right:
      if (i < nx_ - 1) return cell + 1;
      return bc_x_ == Boundary::periodic ? index(0, j) : cell;
    case Side::bottom:
      if (j > 0) return cell - nx_;
      return bc_y_ == Boundary::periodic ? index(i, ny_ - 1) : cell;
    case Side::top:
      if (j < ny_ - 1) return cell + nx_;
      return bc_y_ == Boundary::periodic ? index(i, 0) : cell;
  }
  return cell;
}

Boundary parse_boundary(const std::string& name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "outflow") return Boundary::outflow;
  throw std::invalid_argument("unknown boundary type: " + name);
}

}  // namespace ldfoe
