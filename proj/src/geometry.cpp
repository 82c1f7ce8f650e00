#include "restriction_lab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "restriction_lab/error.hpp"
#include "restriction_lab/quadrature.hpp"

namespace rlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// cos/sin of 2 pi j / N using symmetry so axis points are exact.
void exact_unit(int j, int n, double& c, double& s) {
  if (j == 0) {
    c = 1.0;
    s = 0.0;
  } else if (4 * j == n) {
    c = 0.0;
    s = 1.0;
  } else if (2 * j == n) {
    c = -1.0;
    s = 0.0;
  } else if (4 * j == 3 * n) {
    c = 0.0;
    s = -1.0;
  } else {
    c = std::cos(kTwoPi * j / n);
    s = std::sin(kTwoPi * j / n);
  }
}

}  // namespace

std::vector<double> torus_point(std::span<const double> angles) {
  require(!angles.empty(), "torus_point needs at least one angle");
  std::vector<double> point(2 * angles.size());
  for (std::size_t l = 0; l < angles.size(); ++l) {
    const double k = angles[l];
    if (!(k >= 0.0 && k < 1.0)) {
      fail(ErrorCode::kInvalidArgument, "torus angle must lie in [0, 1), got " + std::to_string(k));
    }
    // Quarter turns map to exact axis points.
    const double four_k = 4.0 * k;
    if (four_k == std::floor(four_k)) {
      exact_unit(static_cast<int>(four_k), 4, point[2 * l], point[2 * l + 1]);
    } else {
      point[2 * l] = std::cos(kTwoPi * k);
      point[2 * l + 1] = std::sin(kTwoPi * k);
    }
  }
  return point;
}

TorusGrid::TorusGrid(int circles, int nodes_per_circle) : circles_(circles), nodes_(nodes_per_circle) {
  require(circles >= 1, "torus grid needs at least one circle factor");
  require(nodes_per_circle >= 4, "torus grid needs at least 4 nodes per circle");
  std::uint64_t count = 1;
  for (int l = 0; l < circles; ++l) {
    count *= static_cast<std::uint64_t>(nodes_per_circle);
    if (count > kMaxNodes) {
      fail(ErrorCode::kGridTooLarge, "torus grid with " + std::to_string(nodes_per_circle) + "^" +
                                         std::to_string(circles) + " nodes exceeds the node limit");
    }
  }
  count_ = static_cast<std::size_t>(count);
  weight_ = std::pow(static_cast<double>(nodes_per_circle), -static_cast<double>(circles));
  cos_table_.resize(nodes_per_circle);
  sin_table_.resize(nodes_per_circle);
  for (int j = 0; j < nodes_per_circle; ++j) exact_unit(j, nodes_per_circle, cos_table_[j], sin_table_[j]);
}

void TorusGrid::node_angles(std::size_t index, std::span<double> angles) const {
  for (int l = circles_ - 1; l >= 0; --l) {
    const auto j = static_cast<int>(index % nodes_);
    index /= nodes_;
    angles[l] = static_cast<double>(j) / nodes_;
  }
}

void TorusGrid::node_point(std::size_t index, std::span<double> point) const {
  for (int l = circles_ - 1; l >= 0; --l) {
    const auto j = static_cast<std::size_t>(index % nodes_);
    index /= nodes_;
    point[2 * l] = cos_table_[j];
    point[2 * l + 1] = sin_table_[j];
  }
}

std::vector<double> TorusGrid::circle_weights() const {
  return std::vector<double>(nodes_, 1.0 / nodes_);
}

std::complex<double> surface_quadrature(const TorusGrid& grid, const SurfaceIntegrand& integrand) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t count = grid.node_count();
  std::vector<std::complex<double>> partial(chunk_count(count, kChunk));
  parallel_chunks(count, kChunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<double> angles(grid.circles());
    std::vector<double> point(grid.ambient_dim());
    ComplexCompensatedSum sum;
    for (std::size_t i = begin; i < end; ++i) {
      grid.node_angles(i, angles);
      grid.node_point(i, point);
      sum.add(integrand(TorusNode{angles, point}));
    }
    partial[c] = sum.value();
  });
  ComplexCompensatedSum total;
  for (const auto& z : partial) total.add(z);
  return total.value() * grid.weight();
}

}  // namespace rlab
