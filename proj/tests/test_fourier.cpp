#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "restriction_lab/error.hpp"
#include "restriction_lab/fourier.hpp"

using namespace rlab;
using V = std::vector<double>;
using cd = std::complex<double>;

TEST_CASE("restriction of a Gaussian to the torus is constant") {
  const auto s = restrict_ft_to_torus(TestFunction::gaussian(1.0, 4), TorusGrid(2, 32));
  REQUIRE(s.values.size() == 1024);
  for (const cd& v : s.values) CHECK(std::abs(v - std::exp(-2 * M_PI)) < 1e-15);
  CHECK_THROWS_AS(restrict_ft_to_torus(TestFunction::gaussian(1.0, 2), TorusGrid(2, 8)), Error);
}

TEST_CASE("restricted tensor samples factor") {
  const auto g = TestFunction::knapp_tube(0.125);
  const auto h = TestFunction::gaussian(1.0, 2);
  const TorusGrid grid(2, 64);
  const auto s = restrict_ft_to_torus(TestFunction::tensor({g, h}), grid);
  V pt(4);
  for (std::size_t i = 0; i < grid.node_count(); i += 5) {
    grid.node_point(i, pt);
    const cd expect = g.fourier(V{pt[0], pt[1]}) * h.fourier(V{pt[2], pt[3]});
    CHECK(std::abs(s.values[i] - expect) <= 1e-15 * std::abs(expect) + 1e-300);
  }
  // Node (k0, anything): |R| e^{-pi}.
  for (std::size_t j = 0; j < 64; j += 9) CHECK(std::abs(s.values[j] - g.knapp_area() * std::exp(-M_PI)) < 1e-12);
}

TEST_CASE("partial transforms") {
  const auto gauss = TestFunction::gaussian(1.0, 2);
  CHECK(std::abs(partial_ft_factorized(TestFunction::tensor({gauss, gauss}), V{1, 0}, V{0, 1}) -
                 std::exp(-2 * M_PI)) < 1e-15);
  const auto knapp = TestFunction::knapp_tube(0.25);
  const auto f = TestFunction::tensor({knapp, gauss});
  gen::Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    const V xi = rng.vec(2, -2, 2);
    const V eta = rng.vec(2, -2, 2);
    const cd v = partial_ft_factorized(f, xi, eta);
    V both = xi;
    both.insert(both.end(), eta.begin(), eta.end());
    CHECK(std::abs(v - f.fourier(both)) <= 1e-12 * std::abs(v));
  }
  const cd zero = partial_ft_factorized(f, V{0, 0}, V{0, 0});
  CHECK(std::abs(zero - knapp.fourier(V{0, 0}) * gauss.lp_norm(1.0)) < 1e-12 * std::abs(zero));
  CHECK_THROWS_AS(partial_ft_factorized(gauss, V{0, 0}, V{0, 0}), Error);
}

TEST_CASE("numeric oracle examples") {
  const auto g = TestFunction::gaussian(1.0, 2);
  CHECK(std::abs(numeric_ft(g, V{1, 0}, {6.0, 128}) - std::exp(-M_PI)) < 1e-10);
  const V lo = {-1, -1};
  const V hi = {1, 1};
  CHECK(std::abs(numeric_ft_box([](std::span<const double>) { return cd(1.0); }, lo, hi, 8, V{0, 0}) - 4.0) < 1e-12);
  const auto k = TestFunction::knapp_tube(0.25);
  CHECK(std::abs(numeric_ft(k, V{1, 0}) - k.knapp_area()) < 1e-8);
}

TEST_CASE("numeric oracle refuses short truncation") {
  try {
    numeric_ft(TestFunction::gaussian(2.0, 2), V{0, 0}, {2.0, 64});
    FAIL("expected truncation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInsufficientTruncation);
  }
  CHECK(numeric_ft_tail_bound(TestFunction::knapp_tube(0.1), 0.1) == 0.0);
  CHECK_THROWS_AS(numeric_ft(TestFunction::gaussian(1.0, 2), V{0, 0, 0}), Error);
}

TEST_CASE("closed forms match the oracle at random frequencies") {
  gen::Rng rng(2024);
  for (const auto& family : oracle::families()) {
    const int count = family == "tensor" ? 3 : 10;
    for (int i = 0; i < count; ++i) {
      const auto c = oracle::random_case(family, rng);
      const V xi = oracle::random_frequency(c.f.dim(), rng);
      const double err = oracle::relative_error(c.f.fourier(xi), numeric_ft(c.f, xi, c.config));
      INFO(family << " " << c.f.describe());
      CHECK(err < 1e-8);
    }
  }
}
