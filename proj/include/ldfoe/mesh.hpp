#ifndef LDFOE_MESH_HPP_
#define LDFOE_MESH_HPP_

#include <string>

namespace ldfoe {

enum class Boundary { periodic, outflow };

struct Box {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;

  double area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
};

enum class Side { left = 0, right = 1, bottom = 2, top = 3 };

// Uniform rectangular partition. Cells are numbered row-major, i fastest:
// cell = j * nx + i.
class Mesh {
 public:
  Mesh(Box domain, int nx, int ny, Boundary bc_x, Boundary bc_y);

  const Box& domain() const { return domain_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int num_cells() const { return nx_ * ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double cell_area() const { return hx_ * hy_; }
  Boundary bc_x() const { return bc_x_; }
  Boundary bc_y() const { return bc_y_; }

  int index(int i, int j) const { return j * nx_ + i; }
  int col(int cell) const { return cell % nx_; }
  int row(int cell) const { return cell / nx_; }

  double center_x(int i) const { return domain_.x_lo + (i + 0.5) * hx_; }
  double center_y(int j) const { return domain_.y_lo + (j + 0.5) * hy_; }

  /// Cell whose coefficients supply the outer trace across a side: the
  /// wrapped neighbor for periodic boundaries, the cell itself for outflow.
  int neighbor(int cell, Side side) const;

 private:
  Box domain_;
  int nx_;
  int ny_;
  double hx_;
  double hy_;
  Boundary bc_x_;
  Boundary bc_y_;
};

Boundary parse_boundary(const std::string& name);

}  // namespace ldfoe

#endif  // LDFOE_MESH_HPP_
