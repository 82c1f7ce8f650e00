#include "restriction_lab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "restriction_lab/error.hpp"
#include "restriction_lab/fourier.hpp"
#include "restriction_lab/norms.hpp"
#include "restriction_lab/quadrature.hpp"

namespace rlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double checked_ratio(double surface, double ambient, const TestFunction& f) {
  if (!(ambient > 0.0) || !(surface > 0.0)) {
    fail(ErrorCode::kZeroNorm, "restriction ratio of " + f.describe() + " has a zero norm");
  }
  return surface / ambient;
}

double circle_ratio(const TestFunction& g, const ExponentPair& pair, int nodes_per_circle) {
  if (g.dim() != 2) fail(ErrorCode::kDimensionMismatch, g.describe() + " is not planar");
  return ratio(g, pair, TorusGrid(1, nodes_per_circle));
}

void check_resolution(double delta_min, int nodes_per_circle) {
  const double needed = 4.0 * kTwoPi / delta_min;
  if (nodes_per_circle < needed) {
    fail(ErrorCode::kUnderResolved, std::to_string(nodes_per_circle) + " nodes per circle cannot resolve a cap of width " +
                                        std::to_string(delta_min) + " (need at least " +
                                        std::to_string(static_cast<int>(std::ceil(needed))) + ")");
  }
}

void check_deltas(const std::vector<double>& deltas) {
  require(deltas.size() >= 4, "a sweep needs at least 4 widths");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    require(deltas[i] > 0.0 && deltas[i] <= 0.25, "Knapp widths must lie in (0, 1/4]");
    if (i) require(deltas[i] < deltas[i - 1], "Knapp widths must be decreasing");
  }
}

void check_scales(const std::vector<double>& scales) {
  require(scales.size() >= 4, "a sweep needs at least 4 scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    require(scales[i] > 0.0 && std::isfinite(scales[i]), "scales must be positive");
    if (i) require(scales[i] > scales[i - 1], "scales must be increasing");
  }
}

LineFit log_fit(const std::vector<double>& params, const std::vector<double>& values) {
  std::vector<double> x(params.size());
  std::vector<double> y(values.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    x[i] = std::log(params[i]);
    y[i] = std::log(values[i]);
  }
  return fit_line(x, y);
}

// Per-circle L^q norms of f-hat for each q.
std::vector<double> circle_lq_norms(const TestFunction& g, const TorusGrid& grid,
                                    const std::vector<LebesgueIndex>& qs) {
  const SurfaceSamples samples = restrict_ft_to_torus(g, grid);
  std::vector<double> out;
  out.reserve(qs.size());
  for (const auto& q : qs) out.push_back(lq_surface_norm(samples, q.value()));
  return out;
}

}  // namespace

double ratio(const TestFunction& f, const ExponentPair& pair, const TorusGrid& grid) {
  const double surface = lq_surface_norm(restrict_ft_to_torus(f, grid), pair.q().value());
  return checked_ratio(surface, f.lp_norm(pair.p().value()), f);
}

double separable_ratio(const TestFunction& f, const ExponentPair& pair, int nodes_per_circle) {
  if (f.kind() != FamilyKind::kTensor) return circle_ratio(f, pair, nodes_per_circle);
  double prod = 1.0;
  for (const auto& g : f.factors()) prod *= separable_ratio(g, pair, nodes_per_circle);
  return prod;
}

int default_nodes_per_circle(double delta_min) {
  require(delta_min > 0.0, "cap width must be positive");
  return std::max(256, static_cast<int>(std::ceil(8.0 * kTwoPi / delta_min)));
}

SweepResult knapp_sweep(const ExponentPair& pair, const std::vector<double>& deltas, int factors,
                        int nodes_per_circle) {
  check_deltas(deltas);
  require(factors >= 1, "a sweep needs at least one factor");
  const double delta_min = deltas.back();
  if (nodes_per_circle == 0) nodes_per_circle = default_nodes_per_circle(delta_min);
  check_resolution(delta_min, nodes_per_circle);

  SweepResult result;
  result.family = "knapp^" + std::to_string(factors);
  result.pair = pair;
  result.factors = factors;
  result.nodes_per_circle = nodes_per_circle;
  result.rows.resize(deltas.size());
  parallel_chunks(deltas.size(), 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double circle = circle_ratio(TestFunction::knapp_tube(deltas[i]), pair, nodes_per_circle);
      result.rows[i] = {deltas[i], std::pow(circle, factors)};
    }
  });
  std::vector<double> params;
  std::vector<double> values;
  for (const auto& row : result.rows) {
    params.push_back(row.parameter);
    values.push_back(row.ratio);
  }
  const LineFit fit = log_fit(params, values);
  result.slope = fit.slope;
  result.residual = fit.rms_residual;
  result.growth_slope = -fit.slope;
  result.expected_growth = knapp_growth_exponent(pair, factors);
  result.expected_slope = -result.expected_growth;
  return result;
}

SweepResult dilation_p_probe(const ExponentPair& pair, const std::vector<double>& scales, int factors,
                             int nodes_per_circle) {
  check_scales(scales);
  require(factors >= 1, "a sweep needs at least one factor");
  SweepResult result;
  result.family = "annular^" + std::to_string(factors);
  result.pair = pair;
  result.factors = factors;
  result.nodes_per_circle = nodes_per_circle;
  result.rows.resize(scales.size());
  parallel_chunks(scales.size(), 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double circle = circle_ratio(TestFunction::annular_bump(scales[i]), pair, nodes_per_circle);
      result.rows[i] = {scales[i], std::pow(circle, factors)};
    }
  });
  std::vector<double> params;
  std::vector<double> values;
  for (const auto& row : result.rows) {
    params.push_back(row.parameter);
    values.push_back(row.ratio);
  }
  const LineFit fit = log_fit(params, values);
  result.slope = fit.slope;
  result.residual = fit.rms_residual;
  result.growth_slope = fit.slope;
  result.expected_growth = dilation_growth_exponent(pair.p(), factors);
  result.expected_slope = result.expected_growth;
  return result;
}

const char* cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::kConsistent:
      return "consistent";
    case CellStatus::kInadmissible:
      return "inadmissible";
    case CellStatus::kBoundary:
      return "boundary";
  }
  return "unknown";
}

double RegionResult::agreement_percent() const {
  if (classified == 0) return 100.0;
  return 100.0 * static_cast<double>(agreeing) / static_cast<double>(classified);
}

std::vector<double> default_region_deltas() {
  std::vector<double> d;
  for (int k = 2; k <= 7; ++k) d.push_back(std::ldexp(1.0, -k));
  return d;
}

std::vector<double> default_region_scales() { return {1.0, 2.0, 4.0, 8.0, 16.0}; }

RegionResult classify_region(const RegionConfig& config) {
  require(!config.p_values.empty() && !config.q_values.empty(), "region grid is empty");
  require(config.factors >= 1, "region needs at least one factor");
  auto by_value = [](const LebesgueIndex& a, const LebesgueIndex& b) { return a.value() < b.value(); };
  std::vector<LebesgueIndex> ps = config.p_values;
  std::vector<LebesgueIndex> qs = config.q_values;
  std::sort(ps.begin(), ps.end(), by_value);
  std::sort(qs.begin(), qs.end(), by_value);
  for (const auto& p : ps) require(p.value() >= 1.0 && p.value() <= 2.0 + kRegionTolerance, "p grid must lie in [1, 2]");
  for (const auto& q : qs) require(q.value() >= 1.0 && q.value() <= 4.0 + kRegionTolerance, "q grid must lie in [1, 4]");

  const std::vector<double> deltas = config.deltas.empty() ? default_region_deltas() : config.deltas;
  const std::vector<double> scales = config.scales.empty() ? default_region_scales() : config.scales;
  check_deltas(deltas);
  check_scales(scales);
  const int nodes = config.nodes_per_circle == 0 ? default_nodes_per_circle(deltas.back()) : config.nodes_per_circle;
  check_resolution(deltas.back(), nodes);
  const TorusGrid circle(1, nodes);

  // Circle-level norms are shared by every cell; the n-fold tensor ratio is
  // the circle ratio to the power n.
  std::vector<std::vector<double>> knapp_lq(deltas.size());
  std::vector<double> knapp_area(deltas.size());
  std::vector<std::vector<double>> annular_lq(scales.size());
  parallel_chunks(deltas.size() + scales.size(), 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i < deltas.size()) {
        const TestFunction g = TestFunction::knapp_tube(deltas[i]);
        knapp_lq[i] = circle_lq_norms(g, circle, qs);
        knapp_area[i] = g.knapp_area();
      } else {
        const std::size_t j = i - deltas.size();
        annular_lq[j] = circle_lq_norms(TestFunction::annular_bump(scales[j]), circle, qs);
      }
    }
  });
  std::vector<double> annular_lp(scales.size() * ps.size());
  parallel_chunks(annular_lp.size(), 1, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t s = i / ps.size();
      const std::size_t pi = i % ps.size();
      annular_lp[i] = TestFunction::annular_bump(scales[s]).lp_norm(ps[pi].value());
    }
  });

  RegionResult result;
  result.factors = config.factors;
  result.nodes_per_circle = nodes;
  result.cells.resize(ps.size() * qs.size());
  std::vector<double> inverse_deltas;
  for (double d : deltas) inverse_deltas.push_back(1.0 / d);
  const double n = config.factors;
  parallel_chunks(result.cells.size(), 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> values;
    for (std::size_t c = begin; c < end; ++c) {
      const std::size_t pi = c / qs.size();
      const std::size_t qi = c % qs.size();
      const double p = ps[pi].value();
      RegionCell& cell = result.cells[c];
      cell.p = ps[pi];
      cell.q = qs[qi];

      values.clear();
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        values.push_back(std::pow(knapp_lq[i][qi] / std::pow(knapp_area[i], 1.0 / p), n));
      }
      cell.knapp_growth = log_fit(inverse_deltas, values).slope;

      values.clear();
      for (std::size_t s = 0; s < scales.size(); ++s) {
        values.push_back(std::pow(annular_lq[s][qi] / annular_lp[s * ps.size() + pi], n));
      }
      cell.dilation_growth = log_fit(scales, values).slope;

      cell.predicted_admissible = torus_admissible(ExponentPair(cell.p, cell.q));
      const bool blows_up = std::max(cell.knapp_growth, cell.dilation_growth) > config.threshold;
      if (boundary_distance(p, cell.q.value()) <= config.boundary_margin) {
        cell.status = CellStatus::kBoundary;
        cell.agrees = true;
      } else {
        cell.status = blows_up ? CellStatus::kInadmissible : CellStatus::kConsistent;
        cell.agrees = blows_up != cell.predicted_admissible;
      }
    }
  });
  for (const auto& cell : result.cells) {
    if (cell.status == CellStatus::kBoundary) continue;
    ++result.classified;
    if (cell.agrees) ++result.agreeing;
  }
  return result;
}

double tensor_factorization_check(const TestFunction& g, const TestFunction& h, const ExponentPair& pair,
                                  int nodes_per_circle) {
  const double factored = circle_ratio(g, pair, nodes_per_circle) * circle_ratio(h, pair, nodes_per_circle);
  const double joint = ratio(TestFunction::tensor({g, h}), pair, TorusGrid(2, nodes_per_circle));
  return std::abs(joint - factored) / factored;
}

DimensionReport dimension_independence(const std::vector<int>& dims, const RegionConfig& config) {
  require(!dims.empty(), "dimension check needs at least one n");
  DimensionReport report;
  for (int n : dims) {
    RegionConfig c = config;
    c.factors = n;
    report.tables.push_back(classify_region(c));
  }
  const auto& first = report.tables.front().cells;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].status == CellStatus::kBoundary) continue;
    for (const auto& t : report.tables) {
      if (t.cells[i].status != first[i].status) {
        report.differing_cells.push_back(i);
        break;
      }
    }
  }
  return report;
}

}  // namespace rlab
