#include "ldfoe/ldf.hpp"

#include <stdexcept>

#include "ldfoe/parallel.hpp"
#include "ldfoe/physics.hpp"

namespace ldfoe {

DfBasis df_basis(const BasisSpec& basis, double hx, double hy) {
  DfBasis df;
  auto add = [&](std::initializer_list<std::pair<int, double>> x,
                 std::initializer_list<std::pair<int, double>> y) {
    DfMode mode;
    for (auto [a, w] : x) mode.bx[a] = w;
    for (auto [a, w] : y) mode.by[a] = w;
    df.modes.push_back(mode);
  };
  // Mode indices: 0:1, 1:X, 2:Y, 3:X^2-1/3, 4:XY, 5:Y^2-1/3.
  add({{0, 1.0}}, {});
  add({}, {{0, 1.0}});
  if (basis.degree() >= 1) {
    add({{1, hx}}, {{2, -hy}});
    add({{2, 1.0}}, {});
    add({}, {{1, 1.0}});
  }
  if (basis.degree() >= 2) {
    add({{3, hx}}, {{4, -2.0 * hy}});
    add({{4, 2.0 * hx}}, {{5, -hy}});
    add({{5, 1.0}}, {});
    add({}, {{3, 1.0}});
  }
  for (const DfMode& mode : df.modes) {
    double n = 0.0;
    for (int a = 0; a < basis.size(); ++a) {
      n += (mode.bx[a] * mode.bx[a] + mode.by[a] * mode.by[a]) *
           BasisSpec::reference_norm(a);
    }
    df.reference_norms.push_back(n);
  }
  return df;
}

LdfProjector::LdfProjector(const BasisSpec& basis, double hx, double hy)
    : modes_(basis.size()), df_(df_basis(basis, hx, hy)) {
  const int n = size();
  map_.assign(static_cast<std::size_t>(n) * n, 0.0);
  // P = sum_l c_l (M c_l)^T / (c_l^T M c_l), with M the reference mass.
  for (std::size_t l = 0; l < df_.modes.size(); ++l) {
    std::vector<double> c(n);
    for (int a = 0; a < modes_; ++a) {
      c[a] = df_.modes[l].bx[a];
      c[modes_ + a] = df_.modes[l].by[a];
    }
    const double inv = 1.0 / df_.reference_norms[l];
    for (int r = 0; r < n; ++r) {
      if (c[r] == 0.0) continue;
      for (int col = 0; col < n; ++col) {
        if (c[col] == 0.0) continue;
        const double m = BasisSpec::reference_norm(col % modes_);
        map_[r * n + col] += c[r] * (c[col] * m) * inv;
      }
    }
  }
}

std::vector<double> LdfProjector::df_coefficients(
    std::span<const double> bx, std::span<const double> by) const {
  std::vector<double> out;
  out.reserve(df_.modes.size());
  for (std::size_t l = 0; l < df_.modes.size(); ++l) {
    double dot = 0.0;
    for (int a = 0; a < modes_; ++a) {
      dot += (df_.modes[l].bx[a] * bx[a] + df_.modes[l].by[a] * by[a]) *
             BasisSpec::reference_norm(a);
    }
    out.push_back(dot / df_.reference_norms[l]);
  }
  return out;
}

void LdfProjector::project(std::span<double> bx, std::span<double> by) const {
  const int n = size();
  std::array<double, 2 * kMaxBasis> in{};
  for (int a = 0; a < modes_; ++a) {
    in[a] = bx[a];
    in[modes_ + a] = by[a];
  }
  std::array<double, 2 * kMaxBasis> out{};
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int col = 0; col < n; ++col) {
      const double m = map_[r * n + col];
      if (m != 0.0) acc += m * in[col];
    }
    out[r] = acc;
  }
  for (int a = 0; a < modes_; ++a) {
    bx[a] = out[a];
    by[a] = out[modes_ + a];
  }
}

void LdfProjector::apply(ModalField& u, int workers) const {
  if (u.basis().size() != modes_) {
    throw std::invalid_argument("LdfProjector: basis mismatch");
  }
  parallel_for(u.num_cells(), workers, [&](int c0, int c1) {
    std::array<double, kMaxBasis> bx{};
    std::array<double, kMaxBasis> by{};
    for (int c = c0; c < c1; ++c) {
      for (int a = 0; a < modes_; ++a) {
        bx[a] = u.at(c, a, var::bx);
        by[a] = u.at(c, a, var::by);
      }
      project(std::span<double>(bx.data(), modes_),
              std::span<double>(by.data(), modes_));
      for (int a = 0; a < modes_; ++a) {
        u.at(c, a, var::bx) = bx[a];
        u.at(c, a, var::by) = by[a];
      }
    }
  });
}

std::vector<double> project_ldf(const BasisSpec& basis,
                                std::span<const double> bx,
                                std::span<const double> by, double hx,
                                double hy) {
  return LdfProjector(basis, hx, hy).df_coefficients(bx, by);
}

void apply_ldf(ModalField& u, int workers) {
  LdfProjector(u.basis(), u.mesh().hx(), u.mesh().hy()).apply(u, workers);
}

}  // namespace ldfoe
