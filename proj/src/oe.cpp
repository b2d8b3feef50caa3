#include "ldfoe/oe.hpp"

#include <algorithm>
#include <cmath>

#include "ldfoe/parallel.hpp"

namespace ldfoe {

namespace {

constexpr std::array<Side, 4> kSides = {Side::left, Side::right, Side::bottom,
                                        Side::top};

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// (2m+1) h^m / (2 (2k-1) m!)
double sigma_prefactor(int m, int k, double h) {
  return (2.0 * m + 1.0) * std::pow(h, m) / (2.0 * (2.0 * k - 1.0) * factorial(m));
}

}  // namespace

OscillationFilter::OscillationFilter(const Mesh& mesh, const BasisSpec& basis,
                                     double gamma, int quad_points, int workers)
    : mesh_(mesh),
      basis_(basis),
      gamma_(gamma),
      workers_(std::max(workers, 1)),
      quad_(basis, quad_points > 0 ? quad_points
                                   : default_quadrature_points(basis.degree())) {
  const int nq = quad_.edge.size();
  for (Side side : kSides) {
    SparseTable& table = deriv_[static_cast<int>(side)];
    table.resize(nq);
    for (int g = 0; g < nq; ++g) {
      const double s = quad_.edge.nodes[g];
      double X = s;
      double Y = s;
      if (side == Side::left) X = -1.0;
      if (side == Side::right) X = 1.0;
      if (side == Side::bottom) Y = -1.0;
      if (side == Side::top) Y = 1.0;
      for (int a = 0; a < basis_.size(); ++a) {
        const auto [a1, a2] = BasisSpec::multi_index(a);
        const BasisValues d =
            basis_.eval_derivative(a1, a2, X, Y, mesh_.hx(), mesh_.hy());
        for (int b = 0; b < basis_.size(); ++b) {
          if (d[b] != 0.0) table[g][a].push_back({b, d[b]});
        }
      }
    }
  }
  const int k = basis_.degree();
  if (k >= 1) {
    for (int m = 0; m <= k; ++m) {
      x_prefactor_[m] = sigma_prefactor(m, k, mesh_.hx());
      y_prefactor_[m] = sigma_prefactor(m, k, mesh_.hy());
    }
  }
}

NormalizationCache OscillationFilter::normalization(const ModalField& u) const {
  NormalizationCache norm;
  const int n = u.num_cells();
  State sum{};
  for (int c = 0; c < n; ++c) {
    for (int v = 0; v < kNumVars; ++v) sum[v] += u.at(c, 0, v);
  }
  for (int v = 0; v < kNumVars; ++v) norm.average[v] = sum[v] / n;

  // Per-chunk maxima, reduced in chunk order.
  const int chunks = std::min(workers_, std::max(n, 1));
  std::vector<State> partial(chunks, State{});
  parallel_for(chunks, workers_, [&](int w0, int w1) {
    for (int w = w0; w < w1; ++w) {
      const int begin = static_cast<int>(static_cast<long long>(n) * w / chunks);
      const int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / chunks);
      State& mx = partial[w];
      auto visit = [&](const State& s) {
        for (int v = 0; v < kNumVars; ++v) {
          mx[v] = std::max(mx[v], std::abs(s[v] - norm.average[v]));
        }
      };
      for (int c = begin; c < end; ++c) {
        for (const auto& phi : quad_.volume_phi) visit(u.eval(c, phi));
        for (const auto& side : quad_.side_phi) {
          for (const auto& phi : side) visit(u.eval(c, phi));
        }
      }
    }
  });
  for (const State& mx : partial) {
    for (int v = 0; v < kNumVars; ++v) {
      norm.fluctuation[v] = std::max(norm.fluctuation[v], mx[v]);
    }
  }
  for (int v = 0; v < kNumVars; ++v) {
    norm.uniform[v] = norm.fluctuation[v] <=
                      kUniformTolerance * std::max(1.0, std::abs(norm.average[v]));
  }
  return norm;
}

OscillationFilter::JumpSums OscillationFilter::face_jumps(const ModalField& u,
                                                          int lower, int upper,
                                                          bool x_face) const {
  JumpSums out{};
  const int k = basis_.degree();
  if (k == 0) return out;
  const SparseTable& own =
      deriv_[static_cast<int>(x_face ? Side::right : Side::top)];
  const SparseTable& other =
      deriv_[static_cast<int>(x_face ? Side::left : Side::bottom)];
  const double* lo = u.cell(lower).data();
  const double* up = u.cell(upper).data();
  const int nq = quad_.edge.size();

  for (int a = 0; a < basis_.size(); ++a) {
    const int m = BasisSpec::mode_degree(a);
    for (int g = 0; g < nq; ++g) {
      State jump{};
      for (const Term& t : own[g][a]) {
        const double* c = lo + t.mode * kNumVars;
        for (int v = 0; v < kNumVars; ++v) jump[v] += c[v] * t.value;
      }
      for (const Term& t : other[g][a]) {
        const double* c = up + t.mode * kNumVars;
        for (int v = 0; v < kNumVars; ++v) jump[v] -= c[v] * t.value;
      }
      // (1/|e|) * integral over the face = sum_g (w_g / 2) f(x_g).
      const double w = 0.5 * quad_.edge.weights[g];
      for (int v = 0; v < kNumVars; ++v) out[m][v] += w * std::abs(jump[v]);
    }
  }
  const auto& pre = x_face ? x_prefactor_ : y_prefactor_;
  for (int m = 0; m <= k; ++m) {
    for (int v = 0; v < kNumVars; ++v) out[m][v] *= pre[m];
  }
  return out;
}

OscillationFilter::JumpSums OscillationFilter::side_jumps(const ModalField& u,
                                                          int cell,
                                                          Side side) const {
  const int nb = mesh_.neighbor(cell, side);
  switch (side) {
    case Side::right: return face_jumps(u, cell, nb, true);
    case Side::left: return face_jumps(u, nb, cell, true);
    case Side::top: return face_jumps(u, cell, nb, false);
    case Side::bottom: return face_jumps(u, nb, cell, false);
  }
  return {};
}

State OscillationFilter::face_sigma(const ModalField& u, int cell, Side side,
                                    int m, const NormalizationCache& norm) const {
  State sigma{};
  if (basis_.degree() == 0) return sigma;
  const JumpSums jumps = side_jumps(u, cell, side);
  for (int v = 0; v < kNumVars; ++v) {
    sigma[v] = norm.uniform[v] ? 0.0 : jumps[m][v] / norm.fluctuation[v];
  }
  return sigma;
}

DampingCoefficients OscillationFilter::combine(
    const State& avg, const JumpSums& right, const JumpSums& left,
    const JumpSums& top, const JumpSums& bottom,
    const NormalizationCache& norm) const {
  DampingCoefficients delta{};
  const int k = basis_.degree();
  // Wave speeds at the cell average.
  const double cx = max_wave_speed(avg, gamma_, {1.0, 0.0}) / mesh_.hx();
  const double cy = max_wave_speed(avg, gamma_, {0.0, 1.0}) / mesh_.hy();
  for (int m = 0; m <= k; ++m) {
    double best = 0.0;
    for (int v = 0; v < kNumVars; ++v) {
      if (norm.uniform[v]) continue;
      const double fl = norm.fluctuation[v];
      const double value = cx * (right[m][v] / fl + left[m][v] / fl) +
                           cy * (top[m][v] / fl + bottom[m][v] / fl);
      best = std::max(best, value);
    }
    delta[m] = best;
  }
  return delta;
}

DampingCoefficients OscillationFilter::deltas(
    const ModalField& u, int cell, const NormalizationCache& norm) const {
  if (basis_.degree() == 0) return {};
  return combine(u.average(cell), side_jumps(u, cell, Side::right),
                 side_jumps(u, cell, Side::left), side_jumps(u, cell, Side::top),
                 side_jumps(u, cell, Side::bottom), norm);
}

double OscillationFilter::delta(const ModalField& u, int cell, int m,
                                const NormalizationCache& norm) const {
  return deltas(u, cell, norm)[m];
}

DampingFactors OscillationFilter::damping_factors(const ModalField& u,
                                                  double tau) const {
  DampingFactors out;
  const int k = basis_.degree();
  out.degree = k;
  out.factors.assign(u.num_cells(), {});
  for (auto& f : out.factors) f.fill(1.0);
  if (k == 0) return out;
  const NormalizationCache norm = normalization(u);

  const int nx = mesh_.nx();
  const int ny = mesh_.ny();
  // x-face (i, j), i in [0, nx], sits on the left of column i; y-face (i, j),
  // j in [0, ny], sits below row j.
  std::vector<JumpSums> xf(static_cast<std::size_t>(nx + 1) * ny);
  std::vector<JumpSums> yf(static_cast<std::size_t>(ny + 1) * nx);
  parallel_for(ny, workers_, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      for (int i = 0; i <= nx; ++i) {
        const int lo = i > 0 ? mesh_.index(i - 1, j)
                             : mesh_.neighbor(mesh_.index(0, j), Side::left);
        const int up = i < nx ? mesh_.index(i, j)
                              : mesh_.neighbor(mesh_.index(nx - 1, j), Side::right);
        xf[static_cast<std::size_t>(j) * (nx + 1) + i] = face_jumps(u, lo, up, true);
      }
    }
  });
  parallel_for(ny + 1, workers_, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      for (int i = 0; i < nx; ++i) {
        const int lo = j > 0 ? mesh_.index(i, j - 1)
                             : mesh_.neighbor(mesh_.index(i, 0), Side::bottom);
        const int up = j < ny ? mesh_.index(i, j)
                              : mesh_.neighbor(mesh_.index(i, ny - 1), Side::top);
        yf[static_cast<std::size_t>(j) * nx + i] = face_jumps(u, lo, up, false);
      }
    }
  });

  parallel_for(u.num_cells(), workers_, [&](int c0, int c1) {
    for (int c = c0; c < c1; ++c) {
      const int i = mesh_.col(c);
      const int j = mesh_.row(c);
      const std::size_t xl = static_cast<std::size_t>(j) * (nx + 1) + i;
      const std::size_t yb = static_cast<std::size_t>(j) * nx + i;
      const DampingCoefficients d =
          combine(u.average(c), xf[xl + 1], xf[xl], yf[yb + nx], yf[yb], norm);
      out.factors[c] = damping_factor_row(d, k, tau);
    }
  });
  return out;
}

void OscillationFilter::apply(ModalField& u,
                              const DampingFactors& factors) const {
  const int k = basis_.degree();
  parallel_for(u.num_cells(), workers_, [&](int c0, int c1) {
    for (int c = c0; c < c1; ++c) {
      for (int j = 1; j <= k; ++j) {
        const double f = factors.at(c, j);
        const auto [first, last] = BasisSpec::degree_range(j);
        for (int a = first; a < last; ++a) {
          for (int v = 0; v < kNumVars; ++v) u.at(c, a, v) *= f;
        }
      }
    }
  });
}

void OscillationFilter::apply(ModalField& u, double tau) const {
  apply(u, damping_factors(u, tau));
}

std::array<double, kMaxDegree> damping_factor_row(const DampingCoefficients& d,
                                                int degree, double tau) {
  std::array<double, kMaxDegree> row;
  row.fill(1.0);
  double partial = d[0];
  for (int j = 1; j <= degree; ++j) {
    partial += d[j];
    row[j - 1] = std::exp(-tau * partial);
  }
  return row;
}

void apply_oe(ModalField& u, double tau, double gamma, int workers) {
  OscillationFilter(u.mesh(), u.basis(), gamma, 0, workers).apply(u, tau);
}

}  // namespace ldfoe
