#include "restriction_lab/extension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "restriction_lab/bessel.hpp"
#include "restriction_lab/error.hpp"
#include "restriction_lab/quadrature.hpp"

namespace rlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> default_radii(double rmax) {
  require(rmax >= 24.0, "rmax must be at least 24 to give four dyadic radii above 3");
  std::vector<double> radii;
  for (double r = rmax; r >= 3.0; r /= 2.0) radii.push_back(r);
  std::reverse(radii.begin(), radii.end());
  return radii;
}

}  // namespace

const char* growth_class_name(GrowthClass c) {
  switch (c) {
    case GrowthClass::kConverged:
      return "converged";
    case GrowthClass::kLogarithmic:
      return "logarithmic";
    case GrowthClass::kPolynomial:
      return "polynomial";
  }
  return "unknown";
}

std::complex<double> extension_operator(const TorusDensity& density, std::span<const double> x,
                                        const TorusGrid& grid) {
  if (static_cast<int>(x.size()) != grid.ambient_dim()) {
    fail(ErrorCode::kDimensionMismatch, "point has dimension " + std::to_string(x.size()) +
                                            " but the torus sits in R^" + std::to_string(grid.ambient_dim()));
  }
  return surface_quadrature(grid, [&](const TorusNode& node) {
    double phase = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) phase += x[d] * node.point[d];
    return std::polar(1.0, kTwoPi * phase) * density(node.angles);
  });
}

double extension_of_one(std::span<const double> x) {
  if (x.empty() || x.size() % 2 != 0) fail(ErrorCode::kDimensionMismatch, "point must have even dimension");
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); i += 2) prod *= bessel_j0(kTwoPi * std::hypot(x[i], x[i + 1]));
  return prod;
}

std::vector<double> planar_bessel_mass(double p_prime, std::span<const double> radii, int nodes_per_panel) {
  require(p_prime > 0.0 && std::isfinite(p_prime), "p' must be positive and finite");
  require(!radii.empty(), "tail probe needs at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require(radii[i] > 0.0, "radii must be positive");
    if (i) require(radii[i] > radii[i - 1], "radii must be increasing");
  }
  // Panels end at zeros of J0(2 pi r) and at every requested radius.
  std::vector<double> edges{0.0};
  for (double z : bessel_j0_zeros_below(kTwoPi * radii.back())) edges.push_back(z / kTwoPi);
  edges.insert(edges.end(), radii.begin(), radii.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::abs(a - b) <= 1e-14 * std::max(1.0, b); }),
              edges.end());

  auto g = [p_prime](double r) { return kTwoPi * r * std::pow(std::abs(bessel_j0(kTwoPi * r)), p_prime); };
  const std::size_t panels = edges.size() - 1;
  std::vector<double> values(panels);
  parallel_chunks(panels, 64, [&](std::size_t, std::size_t begin, std::size_t end) {
    const auto part = integrate_panels(g, std::span<const double>(edges).subspan(begin, end - begin + 1),
                                       nodes_per_panel);
    std::copy(part.begin(), part.end(), values.begin() + static_cast<std::ptrdiff_t>(begin));
  });

  std::vector<double> out;
  out.reserve(radii.size());
  CompensatedSum running;
  std::size_t next = 0;
  for (std::size_t i = 0; i < panels && next < radii.size(); ++i) {
    running.add(values[i]);
    while (next < radii.size() && std::abs(edges[i + 1] - radii[next]) <= 1e-14 * std::max(1.0, radii[next])) {
      out.push_back(running.value());
      ++next;
    }
  }
  require(out.size() == radii.size(), "internal error: radii not aligned with panels");
  return out;
}

TailProbeResult lp_tail_probe(const TailProbeConfig& config) {
  require(config.factors >= 1, "tail probe needs at least one factor");
  require(config.nodes_per_panel >= 2, "tail probe needs at least 2 nodes per panel");
  TailProbeResult result;
  result.p_prime = config.p_prime;
  result.factors = config.factors;
  result.radii = config.radii.empty() ? default_radii(config.rmax) : config.radii;
  require(result.radii.size() >= 4, "tail probe needs at least 4 radii");

  // By the product structure the integral over a product of balls is the
  // planar mass to the power n.
  const std::vector<double> mass = planar_bessel_mass(config.p_prime, result.radii, config.nodes_per_panel);
  const double n = config.factors;
  for (double m : mass) result.truncated_norms.push_back(std::pow(m, n / config.p_prime));

  const std::size_t k = result.radii.size();
  std::vector<double> log_mid;
  std::vector<double> log_density;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const double inc = mass[i + 1] - mass[i];
    require(inc > 0.0, "tail probe shell has no mass");
    const double ratio = result.radii[i + 1] / result.radii[i];
    log_mid.push_back(0.5 * (std::log(result.radii[i]) + std::log(result.radii[i + 1])));
    log_density.push_back(std::log(inc / std::log(ratio)));
  }
  result.slope = fit_line(log_mid, log_density).slope;

  std::vector<double> log_r(k);
  for (std::size_t i = 0; i < k; ++i) log_r[i] = std::log(result.radii[i]);
  const LineFit affine = fit_line(log_r, mass);
  double mean = 0.0;
  for (double m : mass) mean += m;
  mean /= static_cast<double>(k);
  result.log_fit_residual = affine.rms_residual / mean;

  result.last_increment = result.truncated_norms[k - 1] / result.truncated_norms[k - 2] - 1.0;

  if (result.last_increment < config.increment_tolerance || result.slope < -config.flat_tolerance) {
    result.growth_class = GrowthClass::kConverged;
  } else if (result.slope > config.flat_tolerance) {
    result.growth_class = GrowthClass::kPolynomial;
  } else if (result.log_fit_residual < config.log_fit_tolerance) {
    result.growth_class = GrowthClass::kLogarithmic;
  } else {
    char buf[160];
    std::snprintf(buf, sizeof buf, "tail probe at p'=%.6g is inconclusive (shell exponent %.4g, log-fit residual %.4g)",
                  config.p_prime, result.slope, result.log_fit_residual);
    fail(ErrorCode::kInconclusive, buf);
  }
  return result;
}

}  // namespace rlab
