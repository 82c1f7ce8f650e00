#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "restriction_lab/bessel.hpp"
#include "restriction_lab/error.hpp"

using namespace rlab;
using Big = boost::multiprecision::cpp_bin_float_100;

TEST_CASE("J0 reference values") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
  CHECK(bessel_j0(2.0 * M_PI) == doctest::Approx(0.2202769085).epsilon(1e-10));
  CHECK_THROWS_AS(bessel_j0(-1.0), Error);
}

TEST_CASE("J0 matches the standard library on [0, 1000]") {
  gen::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double r = i < 1000 ? rng.uniform(0.0, 30.0) : rng.uniform(0.0, 1000.0);
    CHECK(std::abs(bessel_j0(r) - std::cyl_bessel_j(0.0, r)) < 1e-10);
  }
}

TEST_CASE("asymptotic and extended-precision series agree at r = 100") {
  const Big series = bessel_j0_series<Big>(Big(100), Big("1e-40"));
  CHECK(std::abs(bessel_j0_asymptotic(100.0) - series.convert_to<double>()) < 1e-8);
  // Both branches meet near the switch.
  const double r = kBesselSeriesCutoff;
  CHECK(std::abs(bessel_j0_series(r) - bessel_j0_asymptotic(r)) < 1e-10);
}

TEST_CASE("asymptotic envelope on [20, 200]") {
  for (double r = 20.0; r <= 200.0; r += 0.37) {
    CHECK(std::abs(bessel_j0(r)) <= 1.01 * std::sqrt(2.0 / (M_PI * r)));
  }
}

TEST_CASE("scaled I0") {
  for (double x : {0.0, 0.1, 1.0, 5.0, 30.0, 200.0}) {
    const double ref = std::exp(-x) * std::cyl_bessel_i(0.0, x);
    CHECK(scaled_bessel_i0(x) == doctest::Approx(ref).epsilon(1e-13));
  }
  CHECK_THROWS_AS(scaled_bessel_i0(-0.5), Error);
}

TEST_CASE("zeros of J0") {
  CHECK(bessel_j0_zero(1) == doctest::Approx(2.404825557695773).epsilon(1e-14));
  CHECK(bessel_j0_zero(2) == doctest::Approx(5.520078110286311).epsilon(1e-14));
  CHECK(bessel_j0_zero(10) == doctest::Approx(30.63460646843198).epsilon(1e-13));
  const auto zs = bessel_j0_zeros_below(50.0);
  REQUIRE(zs.size() == 16);
  for (std::size_t i = 1; i < zs.size(); ++i) {
    CHECK(zs[i] - zs[i - 1] == doctest::Approx(M_PI).epsilon(0.01));
  }
  CHECK(bessel_j0_zeros_below(2.0).empty());
  CHECK_THROWS_AS(bessel_j0_zero(0), Error);
}

TEST_CASE("bisection") {
  const double root = bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), Error);
}
