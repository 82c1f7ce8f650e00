#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "restriction_lab/bessel.hpp"
#include "restriction_lab/error.hpp"
#include "restriction_lab/geometry.hpp"

using namespace rlab;
using cd = std::complex<double>;

namespace {

cd bessel_integrand(const TorusNode& node, double r) {
  return std::exp(cd(0.0, 2.0 * M_PI * r * node.point[0]));
}

}  // namespace

TEST_CASE("torus points") {
  CHECK(torus_point(std::vector<double>{0.0, 0.0}) == std::vector<double>{1, 0, 1, 0});
  const auto q = torus_point(std::vector<double>{0.25});
  CHECK(std::abs(q[0]) < 1e-16);
  CHECK(q[1] == 1.0);
  const auto a = torus_point(std::vector<double>{0.5, 0.25});
  CHECK(a[0] == -1.0);
  CHECK(std::abs(a[1]) < 1e-15);
  CHECK(std::abs(a[2]) < 1e-16);
  CHECK(a[3] == 1.0);
  CHECK_THROWS_AS(torus_point(std::vector<double>{1.0}), Error);
  CHECK_THROWS_AS(torus_point(std::vector<double>{-0.1}), Error);
  CHECK_THROWS_AS(torus_point(std::vector<double>{}), Error);
}

TEST_CASE("grid nodes lie on unit circles and carry mass one") {
  const TorusGrid grid(3, 16);
  CHECK(grid.node_count() == 4096);
  CHECK(grid.ambient_dim() == 6);
  CHECK(grid.weight() * static_cast<double>(grid.node_count()) == doctest::Approx(1.0).epsilon(1e-15));
  std::vector<double> pt(6);
  std::vector<double> ang(3);
  for (std::size_t i = 0; i < grid.node_count(); i += 7) {
    grid.node_point(i, pt);
    for (int l = 0; l < 3; ++l) CHECK(std::abs(pt[2 * l] * pt[2 * l] + pt[2 * l + 1] * pt[2 * l + 1] - 1.0) < 1e-14);
  }
  grid.node_angles(1, ang);
  CHECK(ang == std::vector<double>{0.0, 0.0, 1.0 / 16});
  double total = 0.0;
  for (double w : grid.circle_weights()) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("grid size checks") {
  CHECK_THROWS_AS(TorusGrid(0, 64), Error);
  CHECK_THROWS_AS(TorusGrid(1, 3), Error);
  try {
    TorusGrid(4, 1024);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kGridTooLarge);
  }
}

TEST_CASE("quadrature of constants and single modes") {
  for (int n = 1; n <= 3; ++n) {
    const TorusGrid grid(n, 32);
    CHECK(std::abs(surface_quadrature(grid, [](const TorusNode&) { return cd(1.0); }) - 1.0) < 1e-14);
    const cd c = surface_quadrature(grid, [](const TorusNode& node) { return cd(std::cos(2.0 * M_PI * node.angles[0])); });
    CHECK(std::abs(c) < 1e-14);
  }
}

TEST_CASE("circle quadrature reproduces J0") {
  const TorusGrid grid(1, 64);
  const cd v = surface_quadrature(grid, [](const TorusNode& node) { return bessel_integrand(node, 1.0); });
  CHECK(std::abs(v - bessel_j0_series(2.0 * M_PI)) < 1e-12);
  CHECK(std::abs(v.imag()) < 1e-14);
}

TEST_CASE("spectral convergence from 128 to 256 nodes") {
  const TorusGrid coarse(1, 128);
  const TorusGrid fine(1, 256);
  for (double r : {0.5, 1.0, 3.0, 7.5, 10.0}) {
    auto f = [r](const TorusNode& node) { return bessel_integrand(node, r); };
    CHECK(std::abs(surface_quadrature(coarse, f) - surface_quadrature(fine, f)) < 1e-12);
  }
}

TEST_CASE("separable integrands factor") {
  auto F = [](double k) { return cd(1.0 + std::cos(2 * M_PI * k), std::sin(6 * M_PI * k)) * std::exp(std::sin(2 * M_PI * k)); };
  auto G = [](double k) { return std::exp(cd(0.0, 3.0 * std::cos(2 * M_PI * k))); };
  const TorusGrid one(1, 48);
  const TorusGrid two(2, 48);
  const cd a = surface_quadrature(one, [&](const TorusNode& n) { return F(n.angles[0]); });
  const cd b = surface_quadrature(one, [&](const TorusNode& n) { return G(n.angles[0]); });
  const cd ab = surface_quadrature(two, [&](const TorusNode& n) { return F(n.angles[0]) * G(n.angles[1]); });
  CHECK(std::abs(ab - a * b) < 1e-14);
}
