#include "restriction_lab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "restriction_lab/error.hpp"
#include "restriction_lab/quadrature.hpp"

namespace rlab {
namespace {

void check_index(double q) {
  require(q >= 1.0 && std::isfinite(q), "Lebesgue index must be ≥ 1 and finite");
}

// Scaled by the largest magnitude so |v|^q cannot overflow.
template <class Magnitude>
double scaled_norm(std::size_t n, Magnitude magnitude, std::span<const double> weights, double q) {
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) peak = std::max(peak, magnitude(i));
  if (peak == 0.0) return 0.0;
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = magnitude(i) / peak;
    if (m != 0.0) sum.add(weights[i] * std::pow(m, q));
  }
  return peak * std::pow(sum.value(), 1.0 / q);
}

}  // namespace

double weighted_lq_norm(std::span<const std::complex<double>> values, std::span<const double> weights,
                        double q) {
  check_index(q);
  require(values.size() == weights.size(), "values and weights differ in length");
  return scaled_norm(values.size(), [&](std::size_t i) { return std::abs(values[i]); }, weights, q);
}

double weighted_lq_norm(std::span<const double> values, std::span<const double> weights, double q) {
  check_index(q);
  require(values.size() == weights.size(), "values and weights differ in length");
  return scaled_norm(values.size(), [&](std::size_t i) { return std::abs(values[i]); }, weights, q);
}

double lq_surface_norm(const SurfaceSamples& samples, double q) {
  check_index(q);
  require(samples.values.size() == samples.grid.node_count(), "sample count does not match the grid");
  const double w = samples.grid.weight();
  const auto& v = samples.values;
  double peak = 0.0;
  for (const auto& z : v) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0.0;
  CompensatedSum sum;
  for (const auto& z : v) {
    const double m = std::abs(z) / peak;
    if (m != 0.0) sum.add(std::pow(m, q));
  }
  return peak * std::pow(w * sum.value(), 1.0 / q);
}

MinkowskiReport minkowski_check(std::span<const double> values, double p, double q,
                                std::span<const double> surface_weights,
                                std::span<const double> ambient_weights) {
  check_index(p);
  check_index(q);
  const std::size_t rows = surface_weights.size();
  const std::size_t cols = ambient_weights.size();
  require(rows > 0 && cols > 0, "minkowski_check needs non-empty weights");
  require(values.size() == rows * cols, "values shape does not match the weights");
  for (double v : values) require(v >= 0.0, "minkowski_check needs non-negative values");

  std::vector<double> inner_p(rows);
  for (std::size_t s = 0; s < rows; ++s) {
    inner_p[s] = weighted_lq_norm(values.subspan(s * cols, cols), ambient_weights, p);
  }
  std::vector<double> column(rows);
  std::vector<double> inner_q(cols);
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t s = 0; s < rows; ++s) column[s] = values[s * cols + a];
    inner_q[a] = weighted_lq_norm(column, surface_weights, q);
  }
  MinkowskiReport report;
  report.lhs = weighted_lq_norm(inner_p, surface_weights, q);
  report.rhs = weighted_lq_norm(inner_q, ambient_weights, p);
  report.holds = report.lhs <= report.rhs * (1.0 + 1e-12);
  report.guaranteed = q >= p;
  return report;
}

}  // namespace rlab
