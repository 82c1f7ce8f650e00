#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "restriction_lab/geometry.hpp"

namespace rlab {

using TorusDensity = std::function<std::complex<double>(std::span<const double> angles)>;

// int_{T^n} exp(2 pi i x.xi) F(xi) d sigma_n(xi) by the grid's trapezoid rule.
std::complex<double> extension_operator(const TorusDensity& density, std::span<const double> x,
                                        const TorusGrid& grid);

// prod_i J0(2 pi |x_i|), the extension of F = 1 with x split into planar blocks.
double extension_of_one(std::span<const double> x);

enum class GrowthClass { kConverged, kLogarithmic, kPolynomial };

const char* growth_class_name(GrowthClass c);

struct TailProbeConfig {
  double p_prime = 4.0;
  // Increasing truncation radii. When empty, dyadic radii rmax, rmax/2, ...
  // down to 3 are used.
  std::vector<double> radii;
  double rmax = 200.0;
  int factors = 2;
  // Gauss-Legendre nodes per radial panel; panels end at the zeros of J0(2 pi r).
  int nodes_per_panel = 24;
  // |shell exponent| at or below this counts as flat.
  double flat_tolerance = 0.1;
  // Relative growth of the last truncated norm below which the probe is
  // called converged outright.
  double increment_tolerance = 1e-6;
  // Relative RMS residual allowed for the affine fit in log R.
  double log_fit_tolerance = 0.05;
};

struct TailProbeResult {
  double p_prime = 0.0;
  int factors = 0;
  std::vector<double> radii;
  // L^{p'} norm of prod J0(2 pi |x_i|) over the product of balls of each radius.
  std::vector<double> truncated_norms;
  GrowthClass growth_class = GrowthClass::kConverged;
  // Fitted exponent s of the per-factor shell mass, d(mass) ~ R^s d(log R).
  double slope = 0.0;
  // Relative RMS residual of the per-factor mass fitted affinely in log R.
  double log_fit_residual = 0.0;
  double last_increment = 0.0;
};

// int_{|x| < R} |J0(2 pi |x|)|^{p'} dx over R^2 for each R.
std::vector<double> planar_bessel_mass(double p_prime, std::span<const double> radii, int nodes_per_panel = 24);

TailProbeResult lp_tail_probe(const TailProbeConfig& config);

}  // namespace rlab
