#include "restriction_lab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "restriction_lab/error.hpp"
#include "restriction_lab/quadrature.hpp"

namespace rlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTailLimit = 1e-12;
constexpr std::uint64_t kMaxOraclePoints = std::uint64_t{1} << 30;

// Quadrature points of one factor: `dim` coordinates per point.
struct FactorRule {
  int dim = 0;
  std::vector<double> points;
  std::vector<double> weights;
};

FactorRule box_rule(std::span<const double> lower, std::span<const double> upper, int order) {
  const GaussLegendreRule& gl = gauss_legendre(order);
  FactorRule rule;
  rule.dim = static_cast<int>(lower.size());
  std::size_t count = 1;
  for (int d = 0; d < rule.dim; ++d) count *= static_cast<std::size_t>(order);
  rule.points.reserve(count * rule.dim);
  rule.weights.reserve(count);
  std::vector<int> idx(rule.dim, 0);
  for (std::size_t i = 0; i < count; ++i) {
    double w = 1.0;
    for (int d = 0; d < rule.dim; ++d) {
      const double half = 0.5 * (upper[d] - lower[d]);
      const double mid = 0.5 * (upper[d] + lower[d]);
      rule.points.push_back(mid + half * gl.nodes[idx[d]]);
      w *= half * gl.weights[idx[d]];
    }
    rule.weights.push_back(w);
    for (int d = rule.dim - 1; d >= 0; --d) {
      if (++idx[d] < order) break;
      idx[d] = 0;
    }
  }
  return rule;
}

// Gauss-Legendre on the Knapp rectangle in its own (tangent, normal) frame.
FactorRule knapp_rule(const TestFunction& f, int order) {
  const GaussLegendreRule& gl = gauss_legendre(order);
  const double c = std::cos(kTwoPi * f.knapp_params().center);
  const double s = std::sin(kTwoPi * f.knapp_params().center);
  const double a = f.knapp_half_tangential();
  const double b = f.knapp_half_normal();
  FactorRule rule;
  rule.dim = 2;
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const double u = a * gl.nodes[i];
      const double v = b * gl.nodes[j];
      rule.points.push_back(-u * s + v * c);
      rule.points.push_back(u * c + v * s);
      rule.weights.push_back(a * b * gl.weights[i] * gl.weights[j]);
    }
  }
  return rule;
}

// One rule per non-tensor leaf, in coordinate order. `amplitude` collects the
// constants carried by tensor nodes, which the leaves do not see.
void collect_rules(const TestFunction& f, const NumericFtConfig& config, std::vector<FactorRule>& out,
                   std::vector<const TestFunction*>& leaves, double& amplitude) {
  const double r = config.radius;
  switch (f.kind()) {
    case FamilyKind::kTensor:
      amplitude *= f.amplitude();
      for (const auto& g : f.factors()) collect_rules(g, config, out, leaves, amplitude);
      return;
    case FamilyKind::kKnappTube:
      out.push_back(knapp_rule(f, config.nodes_per_axis));
      break;
    case FamilyKind::kGaussian:
    case FamilyKind::kAnnularBump: {
      std::vector<double> lo(f.dim(), -r);
      std::vector<double> hi(f.dim(), r);
      out.push_back(box_rule(lo, hi, config.nodes_per_axis));
      break;
    }
  }
  leaves.push_back(&f);
}

// Sum over the full product grid of prod_k terms[k][i_k]. Each leaf's terms
// already hold weight * integrand * phase at its own points, so the integrand
// is evaluated once per leaf point instead of once per product point.
std::complex<double> sum_product(const std::vector<std::vector<std::complex<double>>>& terms) {
  const std::size_t head_count = terms.front().size();
  std::vector<std::complex<double>> partial(head_count);
  parallel_chunks(head_count, 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(terms.size(), 0);
    for (std::size_t h = begin; h < end; ++h) {
      ComplexCompensatedSum sum;
      std::fill(idx.begin(), idx.end(), 0);
      for (;;) {
        std::complex<double> prod = terms[0][h];
        for (std::size_t k = 1; k < terms.size(); ++k) prod *= terms[k][idx[k]];
        sum.add(prod);
        std::size_t k = terms.size();
        bool done = false;
        for (;;) {
          if (k == 1) {
            done = true;
            break;
          }
          --k;
          if (++idx[k] < terms[k].size()) break;
          idx[k] = 0;
        }
        if (done) break;
      }
      partial[h] = sum.value();
    }
  });
  ComplexCompensatedSum total;
  for (const auto& z : partial) total.add(z);
  return total.value();
}

std::complex<double> integrate_rules(const std::vector<FactorRule>& rules,
                                     const std::function<std::complex<double>(std::span<const double>)>& f,
                                     std::span<const double> xi) {
  int dim = 0;
  std::uint64_t total = 1;
  for (const auto& r : rules) {
    dim += r.dim;
    total *= r.weights.size();
    if (total > kMaxOraclePoints) fail(ErrorCode::kGridTooLarge, "oracle quadrature has too many points");
  }
  if (static_cast<std::size_t>(dim) != xi.size()) {
    fail(ErrorCode::kDimensionMismatch, "frequency dimension does not match the integrand");
  }
  // Parallel over the first factor's points; each chunk enumerates the rest.
  const FactorRule& head = rules.front();
  const std::size_t head_count = head.weights.size();
  std::vector<std::complex<double>> partial(head_count);
  parallel_chunks(head_count, 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> x(dim);
    std::vector<std::size_t> idx(rules.size(), 0);
    for (std::size_t h = begin; h < end; ++h) {
      ComplexCompensatedSum sum;
      std::fill(idx.begin(), idx.end(), 0);
      idx[0] = h;
      for (;;) {
        double w = 1.0;
        int offset = 0;
        for (std::size_t k = 0; k < rules.size(); ++k) {
          const FactorRule& r = rules[k];
          for (int d = 0; d < r.dim; ++d) x[offset + d] = r.points[idx[k] * r.dim + d];
          w *= r.weights[idx[k]];
          offset += r.dim;
        }
        double phase = 0.0;
        for (int d = 0; d < dim; ++d) phase += x[d] * xi[d];
        sum.add(w * f(x) * std::polar(1.0, -kTwoPi * phase));
        // Advance the odometer over factors 1..K-1; factor 0 stays at h.
        std::size_t k = rules.size();
        bool done = false;
        for (;;) {
          if (k == 1) {
            done = true;
            break;
          }
          --k;
          if (++idx[k] < rules[k].weights.size()) break;
          idx[k] = 0;
        }
        if (done) break;
      }
      partial[h] = sum.value();
    }
  });
  ComplexCompensatedSum total_sum;
  for (const auto& z : partial) total_sum.add(z);
  return total_sum.value();
}

}  // namespace

SurfaceSamples restrict_ft_to_torus(const TestFunction& f, const TorusGrid& grid) {
  if (f.dim() != grid.ambient_dim()) {
    fail(ErrorCode::kDimensionMismatch, f.describe() + " has dimension " + std::to_string(f.dim()) +
                                            " but the torus sits in R^" + std::to_string(grid.ambient_dim()));
  }
  SurfaceSamples out{grid, std::vector<std::complex<double>>(grid.node_count())};
  parallel_chunks(grid.node_count(), 8192, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> point(grid.ambient_dim());
    for (std::size_t i = begin; i < end; ++i) {
      grid.node_point(i, point);
      out.values[i] = f.fourier(point);
    }
  });
  return out;
}

std::complex<double> partial_ft_factorized(const TestFunction& f, std::span<const double> xi,
                                           std::span<const double> eta) {
  const auto factors = f.factors();
  require(factors.size() == 2 && factors[0].dim() == 2 && factors[1].dim() == 2,
          "partial_ft_factorized needs a tensor of two planar factors");
  if (xi.size() != 2 || eta.size() != 2) fail(ErrorCode::kDimensionMismatch, "xi and eta must be planar");
  // Inner transform in y at eta, then outer transform in x at xi.
  const std::complex<double> inner = factors[1].fourier(eta);
  const std::complex<double> factored = f.amplitude() * factors[0].fourier(xi) * inner;
  const double joint[4] = {xi[0], xi[1], eta[0], eta[1]};
  const std::complex<double> direct = f.fourier(joint);
  if (std::abs(factored - direct) > 1e-12 * std::max(std::abs(direct), 1e-300)) {
    fail(ErrorCode::kFactorizationMismatch, "partial transforms disagree with the direct transform of " +
                                                f.describe());
  }
  return factored;
}

double numeric_ft_tail_bound(const TestFunction& f, double radius) {
  switch (f.kind()) {
    case FamilyKind::kKnappTube:
      return 0.0;
    case FamilyKind::kGaussian: {
      const auto& g = f.gaussian_params();
      const double marginal = g.scale * std::erfc(std::sqrt(std::numbers::pi) * radius / g.scale);
      return f.amplitude() * g.dim * marginal * std::pow(g.scale, g.dim - 1);
    }
    case FamilyKind::kAnnularBump: {
      // |J0| <= 1, so the Gaussian window bounds the tail.
      const double s = f.annular_params().scale;
      return f.amplitude() * 2.0 * s * s * std::erfc(std::sqrt(std::numbers::pi) * radius / s);
    }
    case FamilyKind::kTensor: {
      const auto factors = f.factors();
      double bound = 0.0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        double term = numeric_ft_tail_bound(factors[i], radius);
        if (term == 0.0) continue;
        for (std::size_t j = 0; j < factors.size(); ++j) {
          if (j != i) term *= factors[j].lp_norm(1.0);
        }
        bound += term;
      }
      return f.amplitude() * bound;
    }
  }
  return 0.0;
}

std::complex<double> numeric_ft(const TestFunction& f, std::span<const double> xi, const NumericFtConfig& config) {
  require(config.radius > 0.0, "oracle radius must be positive");
  require(config.nodes_per_axis >= 2, "oracle needs at least 2 nodes per axis");
  if (static_cast<int>(xi.size()) != f.dim()) {
    fail(ErrorCode::kDimensionMismatch, "frequency dimension does not match " + f.describe());
  }
  const double tail = numeric_ft_tail_bound(f, config.radius);
  if (tail > kTailLimit) {
    fail(ErrorCode::kInsufficientTruncation,
         "truncation radius " + std::to_string(config.radius) + " leaves tail mass bound " +
             std::to_string(tail) + " for " + f.describe());
  }
  std::vector<FactorRule> rules;
  std::vector<const TestFunction*> leaves;
  double amplitude = 1.0;
  collect_rules(f, config, rules, leaves, amplitude);
  std::uint64_t total = 1;
  for (const auto& r : rules) {
    total *= r.weights.size();
    if (total > kMaxOraclePoints) fail(ErrorCode::kGridTooLarge, "oracle quadrature has too many points");
  }
  std::vector<std::vector<std::complex<double>>> terms(rules.size());
  std::size_t offset = 0;
  for (std::size_t k = 0; k < rules.size(); ++k) {
    const FactorRule& r = rules[k];
    const auto block = xi.subspan(offset, r.dim);
    terms[k].resize(r.weights.size());
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
      const std::span<const double> x(r.points.data() + i * r.dim, r.dim);
      double phase = 0.0;
      for (int d = 0; d < r.dim; ++d) phase += x[d] * block[d];
      terms[k][i] = r.weights[i] * leaves[k]->evaluate(x) * std::polar(1.0, -kTwoPi * phase);
    }
    offset += r.dim;
  }
  return amplitude * sum_product(terms);
}

std::complex<double> numeric_ft_box(const std::function<std::complex<double>(std::span<const double>)>& f,
                                    std::span<const double> lower, std::span<const double> upper,
                                    int nodes_per_axis, std::span<const double> xi) {
  require(lower.size() == upper.size() && !lower.empty(), "box bounds must have equal positive dimension");
  std::vector<FactorRule> rules;
  for (std::size_t d = 0; d < lower.size(); ++d) {
    require(upper[d] > lower[d], "box must have positive extent");
    rules.push_back(box_rule(lower.subspan(d, 1), upper.subspan(d, 1), nodes_per_axis));
  }
  return integrate_rules(rules, f, xi);
}

}  // namespace rlab
