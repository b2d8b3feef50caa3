#ifndef LDFOE_SNAPSHOT_HPP_
#define LDFOE_SNAPSHOT_HPP_

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "ldfoe/config.hpp"
#include "ldfoe/field.hpp"

namespace ldfoe {

inline constexpr std::array<const char*, 13> kSnapshotColumns = {
    "x", "y", "rho", "ux", "uy", "uz", "p", "Bx", "By", "Bz", "mach", "pmag", "divB"};

// Point values at one cell center.
struct CellSample {
  double x, y, rho, ux, uy, uz, p, bx, by, bz, mach, pmag, div_b;
};

/// Samples every cell center, row-major (i fastest).
std::vector<CellSample> sample_cell_centers(const ModalField& u, double gamma);

void write_csv(std::ostream& out, const ModalField& u, double gamma);
void write_vtk(std::ostream& out, const ModalField& u, double gamma, double t,
               const std::string& title);

/// Writes a snapshot file. Throws IoError naming the path on failure.
void write_snapshot(const ModalField& u, double gamma, double t,
                    OutputFormat format, const std::string& path,
                    const std::string& title = "ldfoe");

}  // namespace ldfoe

#endif  // LDFOE_SNAPSHOT_HPP_
