#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "restriction_lab/error.hpp"
#include "restriction_lab/norms.hpp"

using namespace rlab;
using V = std::vector<double>;
using cd = std::complex<double>;

namespace {

SurfaceSamples constant_samples(int n, int nodes, cd c) {
  TorusGrid grid(n, nodes);
  std::vector<cd> values(grid.node_count(), c);
  return {grid, values};
}

V uniform_weights(std::size_t n) { return V(n, 1.0 / static_cast<double>(n)); }

}  // namespace

TEST_CASE("surface norms of simple samples") {
  for (double q : {1.0, 1.5, 2.0, 7.0}) {
    CHECK(lq_surface_norm(constant_samples(2, 8, cd(0.6, -0.8) * 3.0), q) == doctest::Approx(3.0).epsilon(1e-15));
  }
  const auto g = restrict_ft_to_torus(TestFunction::gaussian(1.0, 4), TorusGrid(2, 16));
  for (double q : {1.0, 2.5}) CHECK(lq_surface_norm(g, q) == doctest::Approx(std::exp(-2 * M_PI)).epsilon(1e-14));
  TorusGrid circle(1, 64);
  std::vector<cd> cosine(64);
  for (int j = 0; j < 64; ++j) cosine[j] = std::cos(2 * M_PI * j / 64.0);
  CHECK(lq_surface_norm({circle, cosine}, 2.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(lq_surface_norm({circle, cosine}, 0.5), Error);
}

TEST_CASE("surface norms survive extreme magnitudes") {
  const auto big = constant_samples(1, 8, cd(1e200));
  CHECK(lq_surface_norm(big, 4.0) == doctest::Approx(1e200).epsilon(1e-14));
  const auto tiny = constant_samples(1, 8, cd(1e-200));
  CHECK(lq_surface_norm(tiny, 4.0) == doctest::Approx(1e-200).epsilon(1e-14));
  CHECK(lq_surface_norm(constant_samples(1, 8, cd(0.0)), 2.0) == 0.0);
}

TEST_CASE("Holder monotonicity on the probability measure") {
  gen::Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const V w = uniform_weights(40);
    const V v = rng.nonnegative(40);
    double prev = 0.0;
    for (double q : {1.0, 1.1, 4.0 / 3, 2.0, 3.0, 8.0}) {
      const double n = weighted_lq_norm(v, w, q);
      CHECK(n >= prev * (1 - 1e-14));
      prev = n;
    }
  }
}

TEST_CASE("Minkowski inequality on random arrays") {
  gen::Rng rng(1);
  int held = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = rng.integer(1, 12);
    const std::size_t cols = rng.integer(1, 12);
    const V sw = uniform_weights(rows);
    V aw = rng.vec(cols, 0.01, 2.0);
    const V v = rng.nonnegative(rows * cols);
    const double p = t < 500 ? 1.2 : rng.uniform(1.0, 3.0);
    const double q = t < 500 ? 2.0 : rng.uniform(p, 6.0);
    const auto r = minkowski_check(v, p, q, sw, aw);
    CHECK(r.guaranteed);
    if (r.holds) ++held;
    CHECK(r.lhs <= r.rhs * (1 + 1e-12));
  }
  CHECK(held == 1000);
}

TEST_CASE("Minkowski equality cases") {
  gen::Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = rng.integer(1, 10);
    const std::size_t cols = rng.integer(1, 10);
    const V sw = uniform_weights(rows);
    const V aw = rng.vec(cols, 0.1, 1.0);
    const double p = rng.uniform(1.0, 4.0);
    const V v = rng.nonnegative(rows * cols);
    const auto same = minkowski_check(v, p, p, sw, aw);
    CHECK(std::abs(same.lhs - same.rhs) <= 1e-14 * same.rhs);
    const V a = rng.vec(rows, 0.0, 3.0);
    const V b = rng.vec(cols, 0.0, 3.0);
    V sep(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) sep[i * cols + j] = a[i] * b[j];
    const auto s = minkowski_check(sep, p, rng.uniform(p, 5.0), sw, aw);
    CHECK(std::abs(s.lhs - s.rhs) <= 1e-14 * s.rhs);
  }
}

TEST_CASE("Minkowski with q below p is reported, not guaranteed") {
  // Rows concentrated on distinct columns push lhs above rhs when q < p.
  const V v = {1, 0, 0, 1};
  const V w = {0.5, 0.5};
  const auto r = minkowski_check(v, 2.0, 1.0, w, w);
  CHECK_FALSE(r.guaranteed);
  CHECK_FALSE(r.holds);
  CHECK(r.lhs > r.rhs);
}

TEST_CASE("Minkowski argument checks") {
  const V w = {0.5, 0.5};
  CHECK_THROWS_AS(minkowski_check(V{1, -1, 0, 1}, 1.0, 2.0, w, w), Error);
  CHECK_THROWS_AS(minkowski_check(V{1, 1, 1}, 1.0, 2.0, w, w), Error);
  CHECK_THROWS_AS(minkowski_check(V{1, 1, 1, 1}, 0.5, 2.0, w, w), Error);
}
