#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ldfoe/cases.hpp"
#include "ldfoe/diagnostics.hpp"
#include "ldfoe/ldf.hpp"
#include "test_util.hpp"

using namespace ldfoe;
using ldfoe::testing::integrate_reference;
using ldfoe::testing::randomize;

namespace {

constexpr double kGamma = 5.0 / 3.0;

double divergence(const BasisSpec& b, const double* bx, const double* by, double X, double Y,
                  double hx, double hy) {
  const BasisGradients g = b.eval_grad(X, Y, hx, hy);
  double d = 0.0;
  for (int a = 0; a < b.size(); ++a) d += bx[a] * g[a].x + by[a] * g[a].y;
  return d;
}

// L2 distance over [-1, 1]^2 between two (B_x, B_y) polynomials.
double l2_distance(const BasisSpec& b, const std::vector<double>& p, const std::vector<double>& q) {
  const int n = b.size();
  return std::sqrt(integrate_reference([&](double X, double Y) {
    const BasisValues phi = b.eval(X, Y);
    double dx = 0.0;
    double dy = 0.0;
    for (int a = 0; a < n; ++a) {
      dx += (p[a] - q[a]) * phi[a];
      dy += (p[n + a] - q[n + a]) * phi[a];
    }
    return dx * dx + dy * dy;
  }));
}

}  // namespace

TEST_CASE("divergence-free basis: sizes, divergence, orthogonality") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> ref(-1.0, 1.0);
  const double hx = 0.3;
  const double hy = 0.7;
  for (int k = 0; k <= 2; ++k) {
    const BasisSpec b(k);
    const DfBasis df = df_basis(b, hx, hy);
    const std::size_t expect = k == 0 ? 2 : (k == 1 ? 5 : 9);
    CHECK(df.modes.size() == expect);
    for (const DfMode& mode : df.modes) {
      for (int s = 0; s < 20; ++s) {
        CHECK(std::abs(divergence(b, mode.bx.data(), mode.by.data(), ref(rng), ref(rng), hx,
                                  hy)) < 1e-13);
      }
    }
    for (std::size_t i = 0; i < df.modes.size(); ++i) {
      for (std::size_t j = 0; j < df.modes.size(); ++j) {
        const double dot = integrate_reference([&](double X, double Y) {
          const BasisValues phi = b.eval(X, Y);
          double xi = 0, yi = 0, xj = 0, yj = 0;
          for (int a = 0; a < b.size(); ++a) {
            xi += df.modes[i].bx[a] * phi[a];
            yi += df.modes[i].by[a] * phi[a];
            xj += df.modes[j].bx[a] * phi[a];
            yj += df.modes[j].by[a] * phi[a];
          }
          return xi * xj + yi * yj;
        });
        if (i == j) {
          CHECK(dot == doctest::Approx(df.reference_norms[i]).epsilon(1e-13));
        } else {
          CHECK(std::abs(dot) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("projection is the identity on divergence-free input") {
  const BasisSpec b(2);
  const double hx = 0.25;
  const double hy = 0.25;
  const LdfProjector proj(b, hx, hy);
  // B_x = c0 + c1 Y, B_y = d0 + d1 X.
  std::vector<double> bx = {0.7, 0.0, -1.3, 0, 0, 0};
  std::vector<double> by = {2.1, 0.4, 0.0, 0, 0, 0};
  const std::vector<double> bx0 = bx;
  const std::vector<double> by0 = by;
  proj.project(bx, by);
  for (int a = 0; a < 6; ++a) {
    CHECK(std::abs(bx[a] - bx0[a]) <= 1e-14);
    CHECK(std::abs(by[a] - by0[a]) <= 1e-14);
  }
}

TEST_CASE("projection of a pure x-stretch") {
  for (double h : {0.1, 1.0, 2.0}) {
    const BasisSpec b(2);
    std::vector<double> bx = {0, h / 2, 0, 0, 0, 0};
    std::vector<double> by(6, 0.0);
    const std::vector<double> coeff = project_ldf(b, bx, by, h, h);
    CHECK(coeff.size() == 9);
    for (std::size_t l = 0; l < coeff.size(); ++l) {
      if (l == 2) {
        CHECK(coeff[l] == doctest::Approx(0.25).epsilon(1e-13));
      } else {
        CHECK(std::abs(coeff[l]) < 1e-15);
      }
    }
    LdfProjector(b, h, h).project(bx, by);
    CHECK(bx[1] == doctest::Approx(h / 4).epsilon(1e-13));
    CHECK(by[2] == doctest::Approx(-h / 4).epsilon(1e-13));
  }
  // Unequal sizes: coefficient = hx^2 / (2 (hx^2 + hy^2)).
  const double hx = 0.2;
  const double hy = 0.5;
  std::vector<double> bx = {0, hx / 2, 0, 0, 0, 0};
  std::vector<double> by(6, 0.0);
  const std::vector<double> coeff = project_ldf(BasisSpec(2), bx, by, hx, hy);
  CHECK(coeff[2] == doctest::Approx(hx * hx / (2 * (hx * hx + hy * hy))).epsilon(1e-13));
}

TEST_CASE("projection of zero is zero") {
  const BasisSpec b(2);
  std::vector<double> bx(6, 0.0);
  std::vector<double> by(6, 0.0);
  LdfProjector(b, 0.5, 0.5).project(bx, by);
  for (int a = 0; a < 6; ++a) {
    CHECK(bx[a] == 0.0);
    CHECK(by[a] == 0.0);
  }
}

TEST_CASE("property: projection over random cells") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  for (int k = 0; k <= 2; ++k) {
    const BasisSpec b(k);
    const int n = b.size();
    for (int trial = 0; trial < 100; ++trial) {
      const double hx = 0.05 + std::abs(sym(rng));
      const double hy = 0.05 + std::abs(sym(rng));
      const LdfProjector proj(b, hx, hy);
      std::vector<double> bx(n);
      std::vector<double> by(n);
      for (int a = 0; a < n; ++a) {
        bx[a] = sym(rng);
        by[a] = sym(rng);
      }
      std::vector<double> px = bx;
      std::vector<double> py = by;
      proj.project(px, py);
      CHECK(px[0] == bx[0]);
      CHECK(py[0] == by[0]);

      // Divergence at interior sample points.
      double norm = 0.0;
      for (int a = 0; a < n; ++a) norm = std::max({norm, std::abs(bx[a]), std::abs(by[a])});
      for (double X : {-0.5, 0.0, 0.5}) {
        for (double Y : {-0.5, 0.0, 0.5}) {
          CHECK(std::abs(divergence(b, px.data(), py.data(), X, Y, hx, hy)) <=
                1e-12 * norm / std::min(hx, hy));
        }
      }

      // Idempotence.
      std::vector<double> qx = px;
      std::vector<double> qy = py;
      proj.project(qx, qy);
      for (int a = 0; a < n; ++a) {
        CHECK(std::abs(qx[a] - px[a]) <= 1e-14 * std::max(1.0, std::abs(px[a])));
        CHECK(std::abs(qy[a] - py[a]) <= 1e-14 * std::max(1.0, std::abs(py[a])));
      }

      // Best approximation against random divergence-free fields.
      std::vector<double> input(bx);
      input.insert(input.end(), by.begin(), by.end());
      std::vector<double> projected(px);
      projected.insert(projected.end(), py.begin(), py.end());
      const double dist = l2_distance(b, input, projected);
      const DfBasis& df = proj.df();
      for (int s = 0; s < 100; ++s) {
        std::vector<double> v(2 * n, 0.0);
        for (const DfMode& mode : df.modes) {
          const double c = sym(rng);
          for (int a = 0; a < n; ++a) {
            v[a] += c * mode.bx[a];
            v[n + a] += c * mode.by[a];
          }
        }
        CHECK(dist <= l2_distance(b, input, v) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("closed form coefficients agree with the projector") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  const BasisSpec b(2);
  const LdfProjector proj(b, 0.3, 0.6);
  std::vector<double> bx(6);
  std::vector<double> by(6);
  for (int a = 0; a < 6; ++a) {
    bx[a] = sym(rng);
    by[a] = sym(rng);
  }
  const std::vector<double> c = project_ldf(b, bx, by, 0.3, 0.6);
  std::vector<double> rx(6, 0.0);
  std::vector<double> ry(6, 0.0);
  for (std::size_t l = 0; l < c.size(); ++l) {
    for (int a = 0; a < 6; ++a) {
      rx[a] += c[l] * proj.df().modes[l].bx[a];
      ry[a] += c[l] * proj.df().modes[l].by[a];
    }
  }
  proj.project(bx, by);
  for (int a = 0; a < 6; ++a) {
    CHECK(rx[a] == doctest::Approx(bx[a]).epsilon(1e-14).scale(1.0));
    CHECK(ry[a] == doctest::Approx(by[a]).epsilon(1e-14).scale(1.0));
  }
  CHECK(proj.matrix(0, 0) == 1.0);
  CHECK(proj.matrix(6, 6) == 1.0);
}

TEST_CASE("apply_ldf on a random field") {
  std::mt19937_64 rng(103);
  const Mesh mesh({0, 1, 0, 2}, 5, 4, Boundary::periodic, Boundary::periodic);
  const BasisSpec b(2);
  ModalField u(mesh, b);
  randomize(u, rng, kGamma, 0.5);
  const ModalField before = u;
  apply_ldf(u);
  const double bmax = max_b_magnitude(u);
  CHECK(divergence_report(u).max <= 1e-12 * bmax);
  CHECK(divergence_report(before).max > 1e-3);
  for (int c = 0; c < mesh.num_cells(); ++c) {
    CHECK(u.at(c, 0, var::bx) == before.at(c, 0, var::bx));
    CHECK(u.at(c, 0, var::by) == before.at(c, 0, var::by));
    for (int a = 0; a < b.size(); ++a) {
      for (int v : {var::rho, var::mx, var::my, var::mz, var::ener, var::bz}) {
        CHECK(u.at(c, a, v) == before.at(c, a, v));
      }
    }
  }
  ModalField twice = u;
  apply_ldf(twice);
  for (std::size_t i = 0; i < u.data().size(); ++i) {
    CHECK(std::abs(twice.data()[i] - u.data()[i]) <= 1e-14 * std::max(1.0, std::abs(u.data()[i])));
  }
  ModalField threaded = before;
  apply_ldf(threaded, 3);
  CHECK(threaded.data() == u.data());
}

TEST_CASE("apply_ldf keeps an already divergence-free field") {
  const CaseSpec spec = make_case("orszag_tang");
  const Mesh mesh = spec.make_mesh(16, 16);
  ModalField u = init_field(spec, mesh, BasisSpec(2));
  apply_ldf(u);
  const ModalField once = u;
  apply_ldf(u);
  for (std::size_t i = 0; i < u.data().size(); ++i) {
    CHECK(std::abs(u.data()[i] - once.data()[i]) <= 1e-14 * std::max(1.0, std::abs(once.data()[i])));
  }
}
