// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "gen.hpp"
#include "oracle.hpp"
#include "restriction_lab/bessel.hpp"
#include "restriction_lab/experiments.hpp"
#include "restriction_lab/extension.hpp"
#include "restriction_lab/geometry.hpp"
#include "restriction_lab/norms.hpp"

using namespace rlab;
using Big = boost::multiprecision::cpp_bin_float_100;
using V = std::vector<double>;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %d %s: %s [%.1f s of %.0f s]\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs, budget_s);
  std::fflush(stdout);
}

std::string str(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

V dyadic(int from, int to) {
  V d;
  for (int k = from; k <= to; ++k) d.push_back(std::ldexp(1.0, -k));
  return d;
}

RegionConfig full_grid() {
  RegionConfig c;
  c.p_values = index_range(LebesgueIndex::parse("1"), LebesgueIndex::parse("1.6"), Scalar::parse("0.05"));
  c.q_values = index_range(LebesgueIndex::parse("1"), LebesgueIndex::parse("4"), Scalar::parse("0.05"));
  return c;
}

Outcome region_agreement() {
  const std::string dir = std::string(RLAB_TEST_TMP) + "/acceptance_region";
  std::filesystem::create_directories(dir);
  std::ostringstream out;
  std::ostringstream err;
  const int code = rlab_cli::run_cli({"restriction-lab", "region", "--p-min", "1", "--p-max", "1.6", "--q-min", "1",
                                      "--q-max", "4", "--step", "0.05", "--out", dir},
                                     out, err);
  const auto r = classify_region(full_grid());
  const bool summary = out.str().find("agreement 100% (non-boundary)") != std::string::npos;
  const bool ok = code == 0 && summary && r.agreeing == r.classified && r.classified > 0;
  return {ok, str("cli exit %.0f, %.0f of %.0f non-boundary cells agree", code, double(r.agreeing), double(r.classified))};
}

Outcome knapp_slopes() {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"1", "1"}, {"1.2", "1.5"}, {"1.2", "2"}, {"1.2", "2.5"}, {"1.3", "3"}, {"1.1", "4"}};
  bool ok = true;
  double worst = 0.0;
  double worst_res = 0.0;
  bool below = false;
  bool above = false;
  for (const auto& [p, q] : pairs) {
    const ExponentPair pair(LebesgueIndex::parse(p), LebesgueIndex::parse(q));
    const auto s = knapp_sweep(pair, dyadic(3, 8));
    // Fitted slope is along delta -> 0; prediction 2 (3/p' - 1/q).
    const double predicted = 2.0 * (3.0 / conjugate(pair.p()).value() - 1.0 / pair.q().value());
    const double err = std::abs(s.growth_slope - predicted);
    worst = std::max(worst, err);
    worst_res = std::max(worst_res, s.residual);
    ok = ok && err <= 0.05 && s.residual < 0.05;
    below = below || predicted < 0;
    above = above || predicted > 0;
  }
  ok = ok && below && above;
  return {ok, str("6 pairs, max |fitted - predicted| %.4f, max residual %.4f", worst, worst_res)};
}

Outcome tail_threshold() {
  const std::vector<std::pair<double, GrowthClass>> expect = {
      {3.5, GrowthClass::kPolynomial}, {4.0, GrowthClass::kLogarithmic}, {4.5, GrowthClass::kConverged}};
  bool ok = true;
  std::string detail;
  for (int n : {1, 2}) {
    for (const auto& [pp, cls] : expect) {
      TailProbeConfig c;
      c.p_prime = pp;
      c.factors = n;
      c.rmax = 200.0;
      const auto r = lp_tail_probe(c);
      bool monotone = true;
      for (std::size_t i = 1; i < r.truncated_norms.size(); ++i) {
        monotone = monotone && r.truncated_norms[i] >= r.truncated_norms[i - 1];
      }
      ok = ok && monotone && r.growth_class == cls;
      if (n == 2) detail += str("p'=%.1f ", pp) + growth_class_name(r.growth_class) + str(" (s=%.3f); ", r.slope);
    }
  }
  return {ok, detail + "n=1 matches n=2"};
}

Outcome bessel_oracle() {
  const TorusGrid grid(1, 256);
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto v = surface_quadrature(grid, [r](const TorusNode& node) {
      return std::exp(std::complex<double>(0.0, 2.0 * M_PI * r * std::cos(2.0 * M_PI * node.angles[0])));
    });
    const Big x = Big(2) * boost::math::constants::pi<Big>() * Big(r);
    const double ref = bessel_j0_series<Big>(x, Big("1e-40")).convert_to<double>();
    worst = std::max(worst, std::abs(v - ref));
  }
  const double zero = bisect_root([](double x) { return bessel_j0_series(x); }, 2.0, 3.0);
  const double zero_err = std::abs(zero - 2.404825557695773);
  return {worst < 1e-10 && zero_err < 1e-9, str("max quadrature error %.2e, zero %.15f (error %.1e)", worst, zero, zero_err)};
}

TestFunction random_factor(gen::Rng& rng) {
  switch (rng.integer(0, 2)) {
    case 0:
      return TestFunction::gaussian(rng.uniform(0.5, 2.0), 2);
    case 1:
      return TestFunction::knapp_tube(rng.uniform(1.0 / 32, 0.25), rng.uniform(0.0, 1.0));
    default:
      return TestFunction::annular_bump(rng.uniform(0.5, 8.0));
  }
}

Outcome tensor_factorization() {
  gen::Rng rng(77);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto g = random_factor(rng);
    const auto h = random_factor(rng);
    const double p = rng.uniform(1.0, 2.0);
    const double q = rng.uniform(1.0, 4.0);
    worst = std::max(worst, tensor_factorization_check(g, h, ExponentPair(p, q), 512));
  }
  return {worst < 1e-10, str("20 random pairs, max relative error %.2e", worst)};
}

Outcome minkowski_suite() {
  gen::Rng rng(1);
  int held = 0;
  double worst_eq = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = rng.integer(1, 16);
    const std::size_t cols = rng.integer(1, 16);
    const V sw(rows, 1.0 / rows);
    const V aw = rng.vec(cols, 0.01, 2.0);
    const V v = rng.nonnegative(rows * cols);
    const double p = rng.uniform(1.0, 3.0);
    const double q = rng.uniform(p, 6.0);
    const auto r = minkowski_check(v, p, q, sw, aw);
    if (r.lhs <= r.rhs * (1 + 1e-12)) ++held;
    const auto same = minkowski_check(v, p, p, sw, aw);
    worst_eq = std::max(worst_eq, std::abs(same.lhs - same.rhs) / same.rhs);
    const V a = rng.vec(rows, 0.0, 3.0);
    const V b = rng.vec(cols, 0.0, 3.0);
    V sep(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) sep[i * cols + j] = a[i] * b[j];
    const auto s = minkowski_check(sep, p, q, sw, aw);
    worst_eq = std::max(worst_eq, std::abs(s.lhs - s.rhs) / s.rhs);
  }
  return {held == 1000 && worst_eq <= 1e-14,
          str("%.0f of 1000 arrays hold, max equality-case deviation %.1e", held, worst_eq)};
}

Outcome dimension_check() {
  const auto rep = dimension_independence({1, 2, 3}, full_grid());
  std::size_t classified = rep.tables.front().classified;
  bool all_agree = true;
  for (const auto& t : rep.tables) all_agree = all_agree && t.agreeing == t.classified;
  return {rep.identical() && all_agree,
          str("%.0f differing cells over %.0f non-boundary cells, n = 1, 2, 3", double(rep.differing_cells.size()),
              double(classified))};
}

Outcome oracle_closure() {
  gen::Rng rng(2025);
  double worst = 0.0;
  std::string detail;
  for (const auto& family : oracle::families()) {
    double fam = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto c = oracle::random_case(family, rng);
      const V xi = oracle::random_frequency(c.f.dim(), rng);
      fam = std::max(fam, oracle::relative_error(c.f.fourier(xi), numeric_ft(c.f, xi, c.config)));
    }
    worst = std::max(worst, fam);
    detail += family + str(" %.1e; ", fam);
  }
  double planch = 0.0;
  for (double s : {0.5, 1.0, 2.0}) {
    const auto f = TestFunction::gaussian(s, 2);
    const auto fhat = TestFunction::gaussian(1.0 / s, 2).scaled(s * s);
    planch = std::max(planch, std::abs(f.lp_norm(2.0) - fhat.lp_norm(2.0)) / f.lp_norm(2.0));
  }
  return {worst < 1e-8 && planch < 1e-12, detail + str("Plancherel %.1e", planch)};
}

}  // namespace

int main() {
  criterion(1, "region agreement", 120, region_agreement);
  criterion(2, "Knapp slope law", 30, knapp_slopes);
  criterion(3, "extension threshold", 60, tail_threshold);
  criterion(4, "Bessel oracle", 60, bessel_oracle);
  criterion(5, "tensor factorization", 60, tensor_factorization);
  criterion(6, "Minkowski suite", 60, minkowski_suite);
  criterion(7, "dimension independence", 300, dimension_check);
  criterion(8, "oracle closure", 300, oracle_closure);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
