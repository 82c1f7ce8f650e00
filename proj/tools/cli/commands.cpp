#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "restriction_lab/restriction_lab.h"

namespace rlab_cli {
namespace {

constexpr double kResidualTolerance = 0.05;

void check(rlab_status st) {
  if (st != RLAB_OK) throw LibraryError(std::string(rlab_status_name(st)) + ": " + rlab_last_error());
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using SweepPtr = std::unique_ptr<rlab_sweep, Deleter<rlab_sweep, rlab_sweep_destroy>>;
using RegionPtr = std::unique_ptr<rlab_region, Deleter<rlab_region, rlab_region_destroy>>;
using TailPtr = std::unique_ptr<rlab_tail, Deleter<rlab_tail, rlab_tail_destroy>>;
using FunctionPtr = std::unique_ptr<rlab_function, Deleter<rlab_function, rlab_function_destroy>>;
using ReportPtr = std::unique_ptr<rlab_dimension_report, Deleter<rlab_dimension_report, rlab_dimension_report_destroy>>;

rlab_index index_of(const Settings& s, const std::string& key) {
  rlab_index idx;
  check(rlab_index_parse(s.at(key).c_str(), &idx));
  return idx;
}

std::vector<rlab_index> index_range(const Settings& s, const std::string& lo, const std::string& hi) {
  size_t count = 0;
  check(rlab_index_range(index_of(s, lo), index_of(s, hi), s.at("step").c_str(), nullptr, 0, &count));
  std::vector<rlab_index> out(count);
  check(rlab_index_range(index_of(s, lo), index_of(s, hi), s.at("step").c_str(), out.data(), out.size(), &count));
  return out;
}

std::string two(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g%%", v);
  return buf;
}

struct RegionInputs {
  std::vector<rlab_index> ps;
  std::vector<rlab_index> qs;
  std::vector<double> deltas;
  std::vector<double> scales;
  rlab_region_config config;
};

RegionInputs region_inputs(const Settings& s) {
  RegionInputs in;
  in.ps = index_range(s, "p_min", "p_max");
  in.qs = index_range(s, "q_min", "q_max");
  in.deltas = get_list(s, "deltas");
  std::sort(in.deltas.begin(), in.deltas.end(), std::greater<>());
  in.scales = get_list(s, "scales");
  std::sort(in.scales.begin(), in.scales.end());
  rlab_region_config_init(&in.config);
  if (s.count("factors")) in.config.factors = get_int(s, "factors");
  in.config.deltas = in.deltas.data();
  in.config.delta_count = in.deltas.size();
  in.config.scales = in.scales.data();
  in.config.scale_count = in.scales.size();
  in.config.threshold = get_number(s, "threshold");
  in.config.boundary_margin = get_number(s, "margin");
  in.config.nodes_per_circle = get_int(s, "nodes_per_circle");
  return in;
}

std::vector<rlab_region_cell> cells_of(const rlab_region* region) {
  std::vector<rlab_region_cell> cells(rlab_region_cell_count(region));
  for (size_t i = 0; i < cells.size(); ++i) check(rlab_region_cell_get(region, i, &cells[i]));
  return cells;
}

int run_region(const Settings& s, std::ostream& out) {
  RegionInputs in = region_inputs(s);
  rlab_region* raw = nullptr;
  check(rlab_classify_region(in.ps.data(), in.ps.size(), in.qs.data(), in.qs.size(), &in.config, &raw));
  RegionPtr region(raw);
  const auto cells = cells_of(region.get());

  Csv csv({"p", "q", "knapp_growth", "dilation_growth", "status", "predicted_admissible", "agrees"});
  std::vector<HeatCell> heat;
  std::size_t boundary = 0;
  for (const auto& c : cells) {
    const std::string status = rlab_cell_status_name(c.status);
    csv.row({fmt(c.p.value), fmt(c.q.value), fmt(c.knapp_growth), fmt(c.dilation_growth), status,
             c.predicted_admissible ? "1" : "0", c.agrees ? "1" : "0"});
    heat.push_back({c.p.value, c.q.value, status, c.agrees != 0});
    if (c.status == RLAB_CELL_BOUNDARY) ++boundary;
  }
  const std::string dir = s.at("output_dir");
  write_file(dir, "region.csv", csv.str());
  write_file(dir, "region.svg",
             region_svg(heat, "T^" + std::to_string(rlab_region_factors(region.get())) +
                                  " restriction region (green consistent, red inadmissible, grey boundary)"));
  const size_t classified = rlab_region_classified(region.get());
  const size_t agreeing = rlab_region_agreeing(region.get());
  out << "agreement " << percent(rlab_region_agreement_percent(region.get())) << " (non-boundary): " << agreeing
      << " of " << classified << " cells, " << boundary << " boundary cells deferred, "
      << rlab_region_nodes_per_circle(region.get()) << " nodes per circle\n";
  return agreeing == classified ? kExitOk : kExitDisagreement;
}

SweepPtr make_sweep(const Settings& s, bool knapp) {
  std::vector<double> params = get_list(s, knapp ? "deltas" : "scales");
  if (knapp) {
    std::sort(params.begin(), params.end(), std::greater<>());
  } else {
    std::sort(params.begin(), params.end());
  }
  rlab_sweep* raw = nullptr;
  const rlab_index p = index_of(s, "p");
  const rlab_index q = index_of(s, "q");
  const int factors = get_int(s, "factors");
  const int nodes = get_int(s, "nodes_per_circle");
  if (knapp) {
    check(rlab_knapp_sweep(p, q, params.data(), params.size(), factors, nodes, &raw));
  } else {
    check(rlab_dilation_probe(p, q, params.data(), params.size(), factors, nodes, &raw));
  }
  return SweepPtr(raw);
}

void write_sweep(const Settings& s, const rlab_sweep* sweep, const std::string& name, const std::string& column,
                 bool svg, const std::string& title) {
  rlab_sweep_summary sum;
  rlab_sweep_summary_get(sweep, &sum);
  Csv csv({column, "ratio"});
  std::vector<double> x;
  std::vector<double> y;
  for (size_t i = 0; i < sum.rows; ++i) {
    double a = 0.0;
    double b = 0.0;
    check(rlab_sweep_row(sweep, i, &a, &b));
    csv.row({fmt(a), fmt(b)});
    x.push_back(a);
    y.push_back(b);
  }
  write_file(s.at("output_dir"), name + ".csv", csv.str());
  if (svg) {
    write_file(s.at("output_dir"), name + ".svg",
               loglog_svg(x, y, sum.expected_slope, title, column, "restriction ratio"));
  }
}

int run_knapp(const Settings& s, std::ostream& out) {
  SweepPtr sweep = make_sweep(s, true);
  rlab_sweep_summary sum;
  rlab_sweep_summary_get(sweep.get(), &sum);
  write_sweep(s, sweep.get(), "knapp", "delta", true,
              "Knapp sweep p=" + s.at("p") + " q=" + s.at("q") + " on T^" + std::to_string(sum.factors));
  out << "fitted " << two(sum.slope) << " expected " << two(sum.expected_slope) << " residual "
      << short_num(sum.residual) << " (growth as delta->0 " << two(sum.growth_slope) << ", " << sum.nodes_per_circle
      << " nodes per circle)\n";
  const bool ok = std::abs(sum.slope - sum.expected_slope) <= get_number(s, "slope_tolerance") &&
                  sum.residual < kResidualTolerance;
  return ok ? kExitOk : kExitDisagreement;
}

int run_dilation(const Settings& s, std::ostream& out) {
  SweepPtr sweep = make_sweep(s, false);
  rlab_sweep_summary sum;
  rlab_sweep_summary_get(sweep.get(), &sum);
  write_sweep(s, sweep.get(), "dilation", "lambda", true,
              "Dilation probe p=" + s.at("p") + " q=" + s.at("q") + " on T^" + std::to_string(sum.factors));
  const double p = index_of(s, "p").value;
  const bool blows_up = sum.growth_slope > get_number(s, "threshold");
  const bool near_boundary = std::abs(p - 4.0 / 3.0) <= get_number(s, "margin");
  out << "fitted growth " << two(sum.growth_slope) << " expected " << two(sum.expected_growth) << " residual "
      << short_num(sum.residual) << ": " << (blows_up ? "blow-up" : "bounded")
      << (near_boundary ? " (boundary, deferred)" : "") << "\n";
  if (near_boundary) return kExitOk;
  return blows_up == (p >= 4.0 / 3.0) ? kExitOk : kExitDisagreement;
}

int run_tail(const Settings& s, std::ostream& out) {
  rlab_tail_config c;
  rlab_tail_config_init(&c);
  c.p_prime = get_number(s, "pprime");
  c.rmax = get_number(s, "rmax");
  std::vector<double> radii = get_list(s, "radii");
  std::sort(radii.begin(), radii.end());
  c.radii = radii.data();
  c.radius_count = radii.size();
  c.factors = get_int(s, "factors");
  c.nodes_per_panel = get_int(s, "nodes_per_panel");
  c.flat_tolerance = get_number(s, "flat_tolerance");
  c.increment_tolerance = get_number(s, "increment_tolerance");
  c.log_fit_tolerance = get_number(s, "log_fit_tolerance");
  rlab_tail* raw = nullptr;
  check(rlab_tail_probe(&c, &raw));
  TailPtr tail(raw);

  Csv csv({"pprime", "radius", "truncated_norm"});
  for (size_t i = 0; i < rlab_tail_count(tail.get()); ++i) {
    double r = 0.0;
    double n = 0.0;
    check(rlab_tail_row(tail.get(), i, &r, &n));
    csv.row({fmt(c.p_prime), fmt(r), fmt(n)});
  }
  write_file(s.at("output_dir"), "extension_tail.csv", csv.str());
  const rlab_growth_class cls = rlab_tail_class(tail.get());
  out << "classification: " << rlab_growth_class_name(cls) << " (shell exponent "
      << short_num(rlab_tail_slope(tail.get())) << ", log-fit residual "
      << short_num(rlab_tail_log_fit_residual(tail.get())) << ")\n";
  return (cls == RLAB_GROWTH_CONVERGED) == (c.p_prime > 4.0) ? kExitOk : kExitDisagreement;
}

int run_tensor(const Settings& s, std::ostream& out) {
  rlab_function* g = nullptr;
  rlab_function* h = nullptr;
  check(rlab_function_parse(s.at("g").c_str(), &g));
  FunctionPtr gp(g);
  check(rlab_function_parse(s.at("h").c_str(), &h));
  FunctionPtr hp(h);
  const int nodes = get_int(s, "nodes_per_circle");
  double err = 0.0;
  check(rlab_tensor_factorization_check(g, h, index_of(s, "p"), index_of(s, "q"), nodes, &err));
  const double tol = get_number(s, "tolerance");
  Csv csv({"g", "h", "p", "q", "nodes_per_circle", "relative_error"});
  csv.row({s.at("g"), s.at("h"), fmt(index_of(s, "p").value), fmt(index_of(s, "q").value), std::to_string(nodes),
           fmt(err)});
  write_file(s.at("output_dir"), "tensor_check.csv", csv.str());
  out << "factorization error " << short_num(err) << " (tolerance " << short_num(tol) << ")\n";
  return err < tol ? kExitOk : kExitDisagreement;
}

int run_dimension(const Settings& s, std::ostream& out) {
  RegionInputs in = region_inputs(s);
  const std::vector<int> dims = get_int_list(s, "dims");
  rlab_dimension_report* raw = nullptr;
  check(rlab_dimension_independence(dims.data(), dims.size(), in.ps.data(), in.ps.size(), in.qs.data(),
                                    in.qs.size(), &in.config, &raw));
  ReportPtr report(raw);
  std::vector<std::vector<rlab_region_cell>> tables;
  bool all_agree = true;
  for (size_t t = 0; t < rlab_dimension_report_table_count(report.get()); ++t) {
    const rlab_region* region = rlab_dimension_report_table(report.get(), t);
    tables.push_back(cells_of(region));
    all_agree = all_agree && rlab_region_agreeing(region) == rlab_region_classified(region);
  }
  std::vector<std::string> header = {"p", "q"};
  for (int n : dims) header.push_back("status_n" + std::to_string(n));
  Csv csv(header);
  size_t classified = 0;
  for (size_t i = 0; i < tables.front().size(); ++i) {
    std::vector<std::string> row = {fmt(tables.front()[i].p.value), fmt(tables.front()[i].q.value)};
    for (const auto& t : tables) row.push_back(rlab_cell_status_name(t[i].status));
    csv.row(row);
    if (tables.front()[i].status != RLAB_CELL_BOUNDARY) ++classified;
  }
  write_file(s.at("output_dir"), "dimension_check.csv", csv.str());
  const size_t differing = rlab_dimension_report_differing(report.get());
  std::string list;
  for (size_t i = 0; i < dims.size(); ++i) list += (i ? "," : "") + std::to_string(dims[i]);
  out << (differing == 0 ? "identical" : "different") << " classification across n=" << list << ": "
      << classified - differing << " of " << classified << " non-boundary cells match"
      << (all_agree ? ", agreement 100% (non-boundary)" : ", region disagreement") << "\n";
  return differing == 0 && all_agree ? kExitOk : kExitDisagreement;
}

int run_minkowski(const Settings& s, std::ostream& out) {
  const double p = index_of(s, "p").value;
  const double q = index_of(s, "q").value;
  const int trials = get_int(s, "trials");
  const int rows = get_int(s, "rows");
  const int cols = get_int(s, "cols");
  if (trials < 1 || rows < 1 || cols < 1) throw UsageError("trials, rows and cols must be positive");
  std::mt19937_64 rng(static_cast<std::uint64_t>(get_int(s, "seed")));
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  Csv csv({"trial", "lhs", "rhs", "holds"});
  int holding = 0;
  bool guaranteed = true;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> v(static_cast<size_t>(rows) * cols);
    std::vector<double> sw(rows);
    std::vector<double> aw(cols);
    for (auto& x : v) x = value(rng);
    for (auto& w : sw) w = weight(rng);
    for (auto& w : aw) w = weight(rng);
    rlab_minkowski_report r;
    check(rlab_minkowski_check(v.data(), rows, cols, p, q, sw.data(), aw.data(), &r));
    guaranteed = r.guaranteed != 0;
    holding += r.holds;
    csv.row({std::to_string(t), fmt(r.lhs), fmt(r.rhs), r.holds ? "1" : "0"});
  }
  write_file(s.at("output_dir"), "minkowski.csv", csv.str());
  out << "minkowski: " << holding << " of " << trials << " arrays satisfy lhs <= rhs"
      << (guaranteed ? "" : " (q < p, not guaranteed)") << "\n";
  return !guaranteed || holding == trials ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_experiment(const Settings& settings, std::ostream& out) {
  const std::string& e = settings.at("experiment");
  if (e == "region") return run_region(settings, out);
  if (e == "knapp") return run_knapp(settings, out);
  if (e == "dilation") return run_dilation(settings, out);
  if (e == "extension-tail") return run_tail(settings, out);
  if (e == "tensor-check") return run_tensor(settings, out);
  if (e == "dimension-check") return run_dimension(settings, out);
  if (e == "minkowski") return run_minkowski(settings, out);
  throw UsageError("unknown experiment '" + e + "'");
}

}  // namespace rlab_cli
