#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "restriction_lab/fourier.hpp"

namespace rlab {

// (sum_i w |v_i|^q)^{1/q} under the grid's mass-1 product weights.
double lq_surface_norm(const SurfaceSamples& samples, double q);

// Same for raw values with explicit weights.
double weighted_lq_norm(std::span<const std::complex<double>> values, std::span<const double> weights, double q);
double weighted_lq_norm(std::span<const double> values, std::span<const double> weights, double q);

struct MinkowskiReport {
  // || ||v||_{L^p(ambient)} ||_{L^q(surface)}
  double lhs = 0.0;
  // || ||v||_{L^q(surface)} ||_{L^p(ambient)}
  double rhs = 0.0;
  // lhs <= rhs (1 + 1e-12).
  bool holds = false;
  // False when q < p: the inequality is not guaranteed there and `holds` is
  // informational only.
  bool guaranteed = false;
};

// `values` is row-major with shape (surface_weights.size(), ambient_weights.size())
// and must be non-negative.
MinkowskiReport minkowski_check(std::span<const double> values, double p, double q,
                                std::span<const double> surface_weights,
                                std::span<const double> ambient_weights);

}  // namespace rlab
