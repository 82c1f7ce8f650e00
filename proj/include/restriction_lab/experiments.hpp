#pragma once

#include <string>
#include <vector>

#include "restriction_lab/exponents.hpp"
#include "restriction_lab/functions.hpp"
#include "restriction_lab/geometry.hpp"

namespace rlab {

// ||f-hat restricted to the torus||_{L^q(sigma_n)} / ||f||_{L^p} on the full grid.
double ratio(const TestFunction& f, const ExponentPair& pair, const TorusGrid& grid);

// Same quantity as a product of circle ratios, one per planar factor of f.
double separable_ratio(const TestFunction& f, const ExponentPair& pair, int nodes_per_circle);

// max(256, ceil(8 2 pi / delta_min)).
int default_nodes_per_circle(double delta_min);

struct SweepRow {
  double parameter = 0.0;
  double ratio = 0.0;
};

struct SweepResult {
  std::string family;
  ExponentPair pair{1.0, 1.0};
  int factors = 0;
  int nodes_per_circle = 0;
  std::vector<SweepRow> rows;
  // d log(ratio) / d log(parameter).
  double slope = 0.0;
  double residual = 0.0;
  // Exponent of growth in the concentrating direction (delta -> 0 for Knapp,
  // lambda -> infinity for the dilation family). Positive means blow-up.
  double growth_slope = 0.0;
  double expected_growth = 0.0;
  // Predicted value of `slope`.
  double expected_slope = 0.0;
};

// n-fold tensor of KnappTube(delta, 0) on T^n for each delta. `nodes_per_circle`
// of 0 picks default_nodes_per_circle; fewer than 4 2 pi / delta_min nodes is
// rejected as under-resolved.
SweepResult knapp_sweep(const ExponentPair& pair, const std::vector<double>& deltas, int factors = 2,
                        int nodes_per_circle = 0);

// n-fold tensor of AnnularBump(lambda) for each lambda.
SweepResult dilation_p_probe(const ExponentPair& pair, const std::vector<double>& scales, int factors = 2,
                             int nodes_per_circle = 256);

enum class CellStatus { kConsistent, kInadmissible, kBoundary };

const char* cell_status_name(CellStatus s);

struct RegionCell {
  LebesgueIndex p = LebesgueIndex::from_double(1.0);
  LebesgueIndex q = LebesgueIndex::from_double(1.0);
  double knapp_growth = 0.0;
  double dilation_growth = 0.0;
  CellStatus status = CellStatus::kConsistent;
  bool predicted_admissible = false;
  // Always true for boundary cells.
  bool agrees = true;
};

struct RegionConfig {
  std::vector<LebesgueIndex> p_values;
  std::vector<LebesgueIndex> q_values;
  int factors = 2;
  // Defaults: 2^-2 .. 2^-7 and 1, 2, 4, 8, 16.
  std::vector<double> deltas;
  std::vector<double> scales;
  double threshold = 0.05;
  double boundary_margin = 0.05;
  int nodes_per_circle = 0;
};

struct RegionResult {
  int factors = 0;
  int nodes_per_circle = 0;
  // Sorted by (p, q).
  std::vector<RegionCell> cells;
  std::size_t classified = 0;
  std::size_t agreeing = 0;
  double agreement_percent() const;
};

std::vector<double> default_region_deltas();
std::vector<double> default_region_scales();

RegionResult classify_region(const RegionConfig& config);

// |ratio_{T^2}(g (x) h) - ratio_{S^1}(g) ratio_{S^1}(h)| / (ratio_{S^1}(g) ratio_{S^1}(h)).
double tensor_factorization_check(const TestFunction& g, const TestFunction& h, const ExponentPair& pair,
                                  int nodes_per_circle = 256);

struct DimensionReport {
  std::vector<RegionResult> tables;
  // Non-boundary cells whose status differs between any two tables.
  std::vector<std::size_t> differing_cells;
  bool identical() const { return differing_cells.empty(); }
};

// classify_region once per n in `dims`, with everything else from `config`.
DimensionReport dimension_independence(const std::vector<int>& dims, const RegionConfig& config);

}  // namespace rlab
