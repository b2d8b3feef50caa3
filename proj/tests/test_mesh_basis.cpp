#include <cmath>
#include <random>

#include "doctest.h"
#include "ldfoe/basis.hpp"
#include "ldfoe/cases.hpp"
#include "ldfoe/error.hpp"
#include "ldfoe/field.hpp"
#include "ldfoe/mesh.hpp"
#include "ldfoe/quadrature.hpp"
#include "test_util.hpp"

using namespace ldfoe;
using ldfoe::testing::integrate_reference;

namespace {

void check_values(const BasisValues& got, std::initializer_list<double> want) {
  int i = 0;
  for (double w : want) {
    CAPTURE(i);
    CHECK(got[i] == doctest::Approx(w).epsilon(1e-15));
    ++i;
  }
}

}  // namespace

TEST_CASE("basis evaluation examples") {
  const BasisSpec b(2);
  CHECK(b.size() == 6);
  check_values(b.eval(0, 0), {1, 0, 0, -1.0 / 3, 0, -1.0 / 3});
  check_values(b.eval(1, 1), {1, 1, 1, 2.0 / 3, 1, 2.0 / 3});
  check_values(b.eval(1, -1), {1, 1, -1, 2.0 / 3, -1, 2.0 / 3});
}

TEST_CASE("basis sizes and degree groups") {
  CHECK(BasisSpec(0).size() == 1);
  CHECK(BasisSpec(1).size() == 3);
  CHECK(BasisSpec(2).size() == 6);
  CHECK_THROWS(BasisSpec(3));
  CHECK(BasisSpec::degree_range(0) == std::pair{0, 1});
  CHECK(BasisSpec::degree_range(1) == std::pair{1, 3});
  CHECK(BasisSpec::degree_range(2) == std::pair{3, 6});
  CHECK(BasisSpec::multi_index(4) == std::pair{1, 1});
  CHECK(BasisSpec::multi_index(5) == std::pair{0, 2});
  for (int i = 0; i < 6; ++i) {
    const auto [a1, a2] = BasisSpec::multi_index(i);
    CHECK(BasisSpec::mode_degree(i) == a1 + a2);
  }
}

TEST_CASE("basis gradient examples") {
  const BasisSpec b(2);
  const BasisGradients g = b.eval_grad(0.3, -0.7, 0.5, 0.25);
  CHECK(g[0].x == 0.0);
  CHECK(g[0].y == 0.0);
  CHECK(g[1].x == doctest::Approx(4.0));
  CHECK(g[1].y == 0.0);
  const BasisGradients h = b.eval_grad(1, -1, 1, 1);
  CHECK(h[4].x == doctest::Approx(-2.0));
  CHECK(h[4].y == doctest::Approx(2.0));
  // d/dx (X^2 - 1/3) = 4X/hx, d/dy (Y^2 - 1/3) = 4Y/hy.
  CHECK(g[3].x == doctest::Approx(4 * 0.3 / 0.5));
  CHECK(g[5].y == doctest::Approx(4 * -0.7 / 0.25));
}

TEST_CASE("basis derivatives agree with finite differences") {
  const BasisSpec b(2);
  const double hx = 0.4;
  const double hy = 0.7;
  const double X = 0.2;
  const double Y = -0.45;
  const double e = 1e-5;
  // Physical step dx maps to dX = 2 dx / hx.
  for (int i = 0; i < 6; ++i) {
    const double fdx =
        (b.eval(X + 2 * e / hx, Y)[i] - b.eval(X - 2 * e / hx, Y)[i]) / (2 * e);
    const double fdy =
        (b.eval(X, Y + 2 * e / hy)[i] - b.eval(X, Y - 2 * e / hy)[i]) / (2 * e);
    CHECK(b.eval_derivative(1, 0, X, Y, hx, hy)[i] == doctest::Approx(fdx).epsilon(1e-8));
    CHECK(b.eval_derivative(0, 1, X, Y, hx, hy)[i] == doctest::Approx(fdy).epsilon(1e-8));
    CHECK(b.eval_derivative(0, 0, X, Y, hx, hy)[i] == b.eval(X, Y)[i]);
  }
  CHECK(b.eval_derivative(2, 0, X, Y, hx, hy)[3] == doctest::Approx(8 / (hx * hx)));
  CHECK(b.eval_derivative(1, 1, X, Y, hx, hy)[4] == doctest::Approx(4 / (hx * hy)));
  CHECK(b.eval_derivative(0, 2, X, Y, hx, hy)[5] == doctest::Approx(8 / (hy * hy)));
}

TEST_CASE("mass diagonal matches the quadrature oracle") {
  const BasisSpec b(2);
  const BasisValues ref = b.mass_diagonal(2, 2);
  check_values(ref, {4, 4.0 / 3, 4.0 / 3, 16.0 / 45, 4.0 / 9, 16.0 / 45});
  const BasisValues unit = b.mass_diagonal(1, 1);
  for (int i = 0; i < 6; ++i) CHECK(unit[i] == doctest::Approx(ref[i] / 4));
  for (int i = 0; i < 6; ++i) {
    const double oracle =
        integrate_reference([&](double X, double Y) { return std::pow(b.eval(X, Y)[i], 2); });
    CHECK(BasisSpec::reference_norm(i) == doctest::Approx(oracle).epsilon(1e-14));
  }
}

TEST_CASE("basis is orthogonal") {
  const BasisSpec b(2);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      const double cross =
          integrate_reference([&](double X, double Y) {
            const BasisValues v = b.eval(X, Y);
            return v[i] * v[j];
          });
      CHECK(std::abs(cross) < 1e-13);
    }
  }
}

TEST_CASE("Gauss-Legendre exactness") {
  for (int n = 1; n <= 5; ++n) {
    const GaussRule r = gauss_legendre(n);
    CHECK(r.size() == n);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double sum = 0.0;
      for (int q = 0; q < n; ++q) sum += r.weights[q] * std::pow(r.nodes[q], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CAPTURE(n);
      CAPTURE(deg);
      CHECK(std::abs(sum - exact) < 1e-14);
    }
  }
  const GaussRule r4 = gauss_legendre(4);
  for (int q = 0; q < 4; ++q) {
    CHECK(r4.nodes[q] == doctest::Approx(testing::kGauss4Nodes[q]).epsilon(1e-15));
    CHECK(r4.weights[q] == doctest::Approx(testing::kGauss4Weights[q]).epsilon(1e-15));
  }
}

TEST_CASE("tensor rule integrates basis products exactly") {
  const BasisSpec b(2);
  const SquareRule sq = tensor_rule(gauss_legendre(3));
  CHECK(sq.size() == 9);
  CHECK(sq.x[1] > sq.x[0]);
  CHECK(sq.y[1] == sq.y[0]);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      double sum = 0.0;
      for (int q = 0; q < sq.size(); ++q) {
        const BasisValues v = b.eval(sq.x[q], sq.y[q]);
        sum += sq.weights[q] * v[i] * v[j];
      }
      const double want = i == j ? BasisSpec::reference_norm(i) : 0.0;
      CHECK(std::abs(sum - want) < 1e-13);
    }
  }
}

TEST_CASE("mesh geometry and neighbors") {
  const Mesh m({0, 2, -1, 1}, 4, 5, Boundary::periodic, Boundary::periodic);
  CHECK(m.hx() == 0.5);
  CHECK(m.hy() == doctest::Approx(0.4));
  CHECK(m.num_cells() == 20);
  CHECK(m.index(3, 2) == 11);
  CHECK(m.col(11) == 3);
  CHECK(m.row(11) == 2);
  CHECK(m.center_x(0) == 0.25);
  for (int j = 0; j < 5; ++j) {
    CHECK(m.neighbor(m.index(0, j), Side::left) == m.index(3, j));
    CHECK(m.neighbor(m.index(3, j), Side::right) == m.index(0, j));
    CHECK(m.neighbor(m.index(1, j), Side::right) == m.index(2, j));
  }
  CHECK(m.neighbor(m.index(2, 0), Side::bottom) == m.index(2, 4));
  CHECK(m.neighbor(m.index(2, 4), Side::top) == m.index(2, 0));

  const Mesh small({0, 1, 0, 1}, 2, 2, Boundary::periodic, Boundary::periodic);
  CHECK(small.neighbor(small.index(1, 0), Side::right) == small.index(0, 0));

  const Mesh open({0, 1, 0, 1}, 3, 3, Boundary::outflow, Boundary::outflow);
  for (int c : {open.index(0, 1), open.index(0, 0)}) {
    CHECK(open.neighbor(c, Side::left) == c);
  }
  CHECK(open.neighbor(open.index(2, 2), Side::top) == open.index(2, 2));
  CHECK(open.neighbor(open.index(2, 2), Side::right) == open.index(2, 2));
  CHECK(open.neighbor(open.index(1, 1), Side::right) == open.index(2, 1));
}

TEST_CASE("mesh rejects bad input") {
  CHECK_THROWS(Mesh({0, 1, 0, 1}, 0, 2, Boundary::periodic, Boundary::periodic));
  CHECK_THROWS(Mesh({1, 0, 0, 1}, 2, 2, Boundary::periodic, Boundary::periodic));
  CHECK(parse_boundary("outflow") == Boundary::outflow);
  CHECK(parse_boundary("periodic") == Boundary::periodic);
  CHECK_THROWS(parse_boundary("reflect"));
}

TEST_CASE("modal field evaluation") {
  const Mesh m({0, 1, 0, 1}, 2, 2, Boundary::periodic, Boundary::periodic);
  const BasisSpec b(2);
  ModalField u(m, b);
  u.fill(0.0);
  for (int a = 0; a < 6; ++a) u.at(3, a, var::ener) = a + 1.0;
  const BasisValues phi = b.eval(0.3, -0.2);
  double want = 0.0;
  for (int a = 0; a < 6; ++a) want += (a + 1.0) * phi[a];
  CHECK(u.eval(3, 0.3, -0.2)[var::ener] == doctest::Approx(want));
  CHECK(u.average(3)[var::ener] == 1.0);
  CHECK(u.eval(2, 0.3, -0.2)[var::ener] == 0.0);
}

TEST_CASE("property: projection reproduces polynomials of degree <= k") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> sym(-0.2, 0.2);
  for (int k = 0; k <= 2; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      // Random polynomial density in physical coordinates.
      double c[6];
      for (double& ci : c) ci = sym(rng);
      auto poly = [&](double x, double y) {
        double v = 2.0 + c[0];
        if (k >= 1) v += c[1] * x + c[2] * y;
        if (k >= 2) v += c[3] * x * x + c[4] * x * y + c[5] * y * y;
        return v;
      };
      CaseSpec spec;
      spec.name = "poly";
      spec.domain = {-1, 1, -1, 1};
      spec.initial = [&](double x, double y) {
        Primitive p;
        p.rho = poly(x, y);
        return p;
      };
      const Mesh m(spec.domain, 3, 4, Boundary::periodic, Boundary::periodic);
      const BasisSpec b(k);
      const ModalField u = init_field(spec, m, b);
      std::uniform_real_distribution<double> ref(-1.0, 1.0);
      for (int s = 0; s < 20; ++s) {
        const int cell = s % m.num_cells();
        const double X = ref(rng);
        const double Y = ref(rng);
        const double x = m.center_x(m.col(cell)) + X * m.hx() / 2;
        const double y = m.center_y(m.row(cell)) + Y * m.hy() / 2;
        CHECK(u.eval(cell, X, Y)[var::rho] == doctest::Approx(poly(x, y)).epsilon(1e-13));
      }
    }
  }
}
