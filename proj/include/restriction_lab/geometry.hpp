#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rlab {

// Angles in [0, 1)^n -> (cos 2pi k_1, sin 2pi k_1, ..., cos 2pi k_n, sin 2pi k_n).
std::vector<double> torus_point(std::span<const double> angles);

// Uniform product grid on T^n with nodes j/N on each circle and equal weights
// 1/N^n, i.e. the mass-1 product measure. Node index i enumerates the
// multi-index (j_1, ..., j_n) with j_n varying fastest.
class TorusGrid {
 public:
  // Grids with more nodes than this are rejected.
  static constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 28;

  TorusGrid(int circles, int nodes_per_circle);

  int circles() const { return circles_; }
  int nodes_per_circle() const { return nodes_; }
  int ambient_dim() const { return 2 * circles_; }
  std::size_t node_count() const { return count_; }
  double weight() const { return weight_; }

  // Writes the angles of node `index` into `angles` (size circles()).
  void node_angles(std::size_t index, std::span<double> angles) const;
  // Writes the ambient point of node `index` into `point` (size 2 circles()).
  void node_point(std::size_t index, std::span<double> point) const;

  // Weights of one circle factor, all 1/N.
  std::vector<double> circle_weights() const;

 private:
  int circles_;
  int nodes_;
  std::size_t count_;
  double weight_;
  std::vector<double> cos_table_;
  std::vector<double> sin_table_;
};

struct TorusNode {
  std::span<const double> angles;
  std::span<const double> point;
};

using SurfaceIntegrand = std::function<std::complex<double>(const TorusNode&)>;

// Product trapezoid approximation of the integral against sigma_n; exact for
// trigonometric polynomials of degree < N in each angle.
std::complex<double> surface_quadrature(const TorusGrid& grid, const SurfaceIntegrand& integrand);

}  // namespace rlab
