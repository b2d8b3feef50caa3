#include "ldfoe/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

#include "ldfoe/error.hpp"

namespace ldfoe {

std::vector<CellSample> sample_cell_centers(const ModalField& u, double gamma) {
  const Mesh& mesh = u.mesh();
  const BasisSpec& basis = u.basis();
  const BasisValues phi = basis.eval(0.0, 0.0);
  const BasisGradients grad = basis.eval_grad(0.0, 0.0, mesh.hx(), mesh.hy());
  std::vector<CellSample> rows;
  rows.reserve(mesh.num_cells());
  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const int c = mesh.index(i, j);
      const State s = u.eval(c, phi);
      CellSample r{};
      r.x = mesh.center_x(i);
      r.y = mesh.center_y(j);
      r.rho = s[var::rho];
      r.ux = s[var::mx] / r.rho;
      r.uy = s[var::my] / r.rho;
      r.uz = s[var::mz] / r.rho;
      r.p = pressure(s, gamma);
      r.bx = s[var::bx];
      r.by = s[var::by];
      r.bz = s[var::bz];
      const double speed = std::sqrt(r.ux * r.ux + r.uy * r.uy + r.uz * r.uz);
      r.mach = speed / std::sqrt(gamma * r.p / r.rho);
      r.pmag = 0.5 * (r.bx * r.bx + r.by * r.by + r.bz * r.bz);
      double div = 0.0;
      for (int a = 0; a < basis.size(); ++a) {
        div += u.at(c, a, var::bx) * grad[a].x + u.at(c, a, var::by) * grad[a].y;
      }
      r.div_b = div;
      rows.push_back(r);
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const ModalField& u, double gamma) {
  for (std::size_t i = 0; i < kSnapshotColumns.size(); ++i) {
    out << (i ? "," : "") << kSnapshotColumns[i];
  }
  out << '\n' << std::setprecision(17);
  for (const CellSample& r : sample_cell_centers(u, gamma)) {
    out << r.x << ',' << r.y << ',' << r.rho << ',' << r.ux << ',' << r.uy << ','
        << r.uz << ',' << r.p << ',' << r.bx << ',' << r.by << ',' << r.bz << ','
        << r.mach << ',' << r.pmag << ',' << r.div_b << '\n';
  }
}

void write_vtk(std::ostream& out, const ModalField& u, double gamma, double t,
               const std::string& title) {
  const Mesh& mesh = u.mesh();
  const auto rows = sample_cell_centers(u, gamma);
  out << std::setprecision(17);
  out << "# vtk DataFile Version 3.0\n"
      << title << " t=" << t << "\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << mesh.nx() + 1 << ' ' << mesh.ny() + 1 << " 1\n"
      << "ORIGIN " << mesh.domain().x_lo << ' ' << mesh.domain().y_lo << " 0\n"
      << "SPACING " << mesh.hx() << ' ' << mesh.hy() << " 1\n"
      << "CELL_DATA " << mesh.num_cells() << '\n';
  auto scalar = [&](const char* name, double CellSample::*member) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (const CellSample& r : rows) out << r.*member << '\n';
  };
  scalar("rho", &CellSample::rho);
  scalar("ux", &CellSample::ux);
  scalar("uy", &CellSample::uy);
  scalar("uz", &CellSample::uz);
  scalar("p", &CellSample::p);
  scalar("Bx", &CellSample::bx);
  scalar("By", &CellSample::by);
  scalar("Bz", &CellSample::bz);
  scalar("mach", &CellSample::mach);
  scalar("pmag", &CellSample::pmag);
  scalar("divB", &CellSample::div_b);
}

void write_snapshot(const ModalField& u, double gamma, double t,
                    OutputFormat format, const std::string& path,
                    const std::string& title) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (format == OutputFormat::csv) {
    write_csv(out, u, gamma);
  } else {
    write_vtk(out, u, gamma, t, title);
  }
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace ldfoe
