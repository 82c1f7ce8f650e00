#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "restriction_lab/functions.hpp"
#include "restriction_lab/geometry.hpp"

namespace rlab {

// Values of a function at every node of a torus grid, in grid node order.
struct SurfaceSamples {
  TorusGrid grid;
  std::vector<std::complex<double>> values;
};

// f-hat sampled at every node of `grid` through the closed-form transform.
SurfaceSamples restrict_ft_to_torus(const TestFunction& f, const TorusGrid& grid);

// F_{x->xi}(F_{y->eta} f(x, .)(eta))(xi) for f = g (x) h, computed as
// g-hat(xi) h-hat(eta) and checked against the direct 4-dimensional transform.
// Throws kFactorizationMismatch if they differ by more than 1e-12 relative.
std::complex<double> partial_ft_factorized(const TestFunction& f, std::span<const double> xi,
                                           std::span<const double> eta);

struct NumericFtConfig {
  // Half-width of the integration box for Gaussian and annular factors.
  // Knapp factors integrate exactly over their rectangle.
  double radius = 6.0;
  int nodes_per_axis = 128;
};

// Brute-force tensor Gauss-Legendre quadrature of int f(x) exp(-2 pi i x.xi) dx
// over the truncated domain. Throws kInsufficientTruncation when the bound on
// the discarded mass exceeds 1e-12.
std::complex<double> numeric_ft(const TestFunction& f, std::span<const double> xi,
                                const NumericFtConfig& config = {});

// Upper bound on int |f| outside the oracle's integration domain.
double numeric_ft_tail_bound(const TestFunction& f, double radius);

// Same quadrature for an arbitrary integrand on the box [lower, upper].
std::complex<double> numeric_ft_box(const std::function<std::complex<double>(std::span<const double>)>& f,
                                    std::span<const double> lower, std::span<const double> upper,
                                    int nodes_per_axis, std::span<const double> xi);

}  // namespace rlab
