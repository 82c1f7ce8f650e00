#include "restriction_lab/restriction_lab.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "restriction_lab/bessel.hpp"
#include "restriction_lab/error.hpp"
#include "restriction_lab/experiments.hpp"
#include "restriction_lab/extension.hpp"
#include "restriction_lab/fourier.hpp"
#include "restriction_lab/norms.hpp"

struct rlab_grid {
  rlab::TorusGrid grid;
};

struct rlab_function {
  rlab::TestFunction f;
};

struct rlab_samples {
  rlab::SurfaceSamples samples;
};

struct rlab_tail {
  rlab::TailProbeResult result;
};

struct rlab_sweep {
  rlab::SweepResult result;
};

struct rlab_region {
  rlab::RegionResult result;
};

struct rlab_dimension_report {
  rlab::DimensionReport report;
  std::vector<rlab_region> tables;
};

namespace {

thread_local std::string last_error;

rlab_status to_status(rlab::ErrorCode code) {
  switch (code) {
    case rlab::ErrorCode::kInvalidArgument:
      return RLAB_INVALID_ARGUMENT;
    case rlab::ErrorCode::kDimensionMismatch:
      return RLAB_DIMENSION_MISMATCH;
    case rlab::ErrorCode::kUnderResolved:
      return RLAB_UNDER_RESOLVED;
    case rlab::ErrorCode::kInsufficientTruncation:
      return RLAB_INSUFFICIENT_TRUNCATION;
    case rlab::ErrorCode::kFactorizationMismatch:
      return RLAB_FACTORIZATION_MISMATCH;
    case rlab::ErrorCode::kInconclusive:
      return RLAB_INCONCLUSIVE;
    case rlab::ErrorCode::kZeroNorm:
      return RLAB_ZERO_NORM;
    case rlab::ErrorCode::kGridTooLarge:
      return RLAB_GRID_TOO_LARGE;
  }
  return RLAB_INTERNAL;
}

template <class Body>
rlab_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return RLAB_OK;
  } catch (const rlab::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RLAB_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RLAB_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) rlab::fail(rlab::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

rlab::LebesgueIndex from_c(const rlab_index& i) {
  if (i.infinite) return rlab::LebesgueIndex::infinity();
  if (i.exact) return rlab::LebesgueIndex::from_rational(i.num, i.den);
  return rlab::LebesgueIndex::from_double(i.value);
}

rlab_index to_c(const rlab::LebesgueIndex& i) {
  rlab_index out{};
  out.value = i.value();
  out.infinite = i.is_infinite() ? 1 : 0;
  if (i.rational()) {
    out.exact = 1;
    out.num = i.rational()->num;
    out.den = i.rational()->den;
  } else {
    out.exact = i.is_infinite() ? 1 : 0;
    out.num = 0;
    out.den = 1;
  }
  return out;
}

void copy_string(const std::string& s, char* buffer, size_t capacity) {
  need(buffer, "buffer");
  if (capacity <= s.size()) rlab::fail(rlab::ErrorCode::kInvalidArgument, "buffer too small");
  std::memcpy(buffer, s.c_str(), s.size() + 1);
}

void put(std::complex<double> z, double* out) {
  out[0] = z.real();
  out[1] = z.imag();
}

std::vector<rlab::LebesgueIndex> from_c_list(const rlab_index* xs, size_t count) {
  if (count) need(xs, "index list");
  std::vector<rlab::LebesgueIndex> out;
  for (size_t i = 0; i < count; ++i) out.push_back(from_c(xs[i]));
  return out;
}

rlab::RegionConfig region_config(const rlab_index* ps, size_t p_count, const rlab_index* qs, size_t q_count,
                                 const rlab_region_config* config) {
  rlab_region_config defaults;
  rlab_region_config_init(&defaults);
  const rlab_region_config& c = config ? *config : defaults;
  rlab::RegionConfig rc;
  rc.p_values = from_c_list(ps, p_count);
  rc.q_values = from_c_list(qs, q_count);
  rc.factors = c.factors;
  if (c.delta_count) {
    need(c.deltas, "deltas");
    rc.deltas.assign(c.deltas, c.deltas + c.delta_count);
  }
  if (c.scale_count) {
    need(c.scales, "scales");
    rc.scales.assign(c.scales, c.scales + c.scale_count);
  }
  rc.threshold = c.threshold;
  rc.boundary_margin = c.boundary_margin;
  rc.nodes_per_circle = c.nodes_per_circle;
  return rc;
}

}  // namespace

extern "C" {

const char* rlab_last_error(void) { return last_error.c_str(); }

const char* rlab_status_name(rlab_status status) {
  switch (status) {
    case RLAB_OK:
      return "ok";
    case RLAB_INVALID_ARGUMENT:
      return "invalid-argument";
    case RLAB_DIMENSION_MISMATCH:
      return "dimension-mismatch";
    case RLAB_UNDER_RESOLVED:
      return "under-resolved";
    case RLAB_INSUFFICIENT_TRUNCATION:
      return "insufficient-truncation";
    case RLAB_FACTORIZATION_MISMATCH:
      return "factorization-mismatch";
    case RLAB_INCONCLUSIVE:
      return "inconclusive";
    case RLAB_ZERO_NORM:
      return "zero-norm";
    case RLAB_GRID_TOO_LARGE:
      return "grid-too-large";
    case RLAB_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* rlab_version(void) { return "0.1.0"; }

rlab_status rlab_index_parse(const char* text, rlab_index* out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = to_c(rlab::LebesgueIndex::parse(text));
  });
}

rlab_status rlab_index_from_double(double value, rlab_index* out) {
  return guarded([&] {
    need(out, "out");
    *out = to_c(rlab::LebesgueIndex::from_double(value));
  });
}

rlab_status rlab_index_str(rlab_index index, char* buffer, size_t capacity) {
  return guarded([&] { copy_string(from_c(index).str(), buffer, capacity); });
}

rlab_status rlab_conjugate(rlab_index p, rlab_index* out) {
  return guarded([&] {
    need(out, "out");
    *out = to_c(rlab::conjugate(from_c(p)));
  });
}

rlab_status rlab_index_range(rlab_index lo, rlab_index hi, const char* step, rlab_index* out, size_t capacity,
                             size_t* count) {
  return guarded([&] {
    need(step, "step");
    need(count, "count");
    const auto range = rlab::index_range(from_c(lo), from_c(hi), rlab::Scalar::parse(step));
    *count = range.size();
    if (capacity) need(out, "out");
    for (size_t i = 0; i < range.size() && i < capacity; ++i) out[i] = to_c(range[i]);
  });
}

rlab_status rlab_torus_admissible(rlab_index p, rlab_index q, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::torus_admissible(rlab::ExponentPair(from_c(p), from_c(q))) ? 1 : 0;
  });
}

rlab_status rlab_sphere_conjecture_region(int ambient_dim, rlab_index p, rlab_index q, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::sphere_conjecture_region(ambient_dim, rlab::ExponentPair(from_c(p), from_c(q))) ? 1 : 0;
  });
}

rlab_status rlab_dual_extension_region(rlab_index p_prime, rlab_index q_prime, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::dual_extension_region(from_c(p_prime), from_c(q_prime)) ? 1 : 0;
  });
}

rlab_status rlab_knapp_growth_exponent(rlab_index p, rlab_index q, int factors, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::knapp_growth_exponent(rlab::ExponentPair(from_c(p), from_c(q)), factors);
  });
}

rlab_status rlab_dilation_growth_exponent(rlab_index p, int factors, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::dilation_growth_exponent(from_c(p), factors);
  });
}

rlab_status rlab_boundary_distance(double p, double q, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::boundary_distance(p, q);
  });
}

rlab_status rlab_parse_scalar(const char* text, double* out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = rlab::Scalar::parse(text).value;
  });
}

rlab_status rlab_grid_create(int circles, int nodes_per_circle, rlab_grid** out) {
  return guarded([&] {
    need(out, "out");
    *out = new rlab_grid{rlab::TorusGrid(circles, nodes_per_circle)};
  });
}

void rlab_grid_destroy(rlab_grid* grid) { delete grid; }

size_t rlab_grid_node_count(const rlab_grid* grid) { return grid ? grid->grid.node_count() : 0; }

int rlab_grid_ambient_dim(const rlab_grid* grid) { return grid ? grid->grid.ambient_dim() : 0; }

double rlab_grid_weight(const rlab_grid* grid) { return grid ? grid->grid.weight() : 0.0; }

rlab_status rlab_grid_node_point(const rlab_grid* grid, size_t index, double* point) {
  return guarded([&] {
    need(grid, "grid");
    need(point, "point");
    rlab::require(index < grid->grid.node_count(), "node index out of range");
    grid->grid.node_point(index, std::span<double>(point, static_cast<size_t>(grid->grid.ambient_dim())));
  });
}

rlab_status rlab_torus_point(const double* angles, int circles, double* point) {
  return guarded([&] {
    need(angles, "angles");
    need(point, "point");
    rlab::require(circles >= 1, "torus needs at least one circle");
    const auto p = rlab::torus_point(std::span<const double>(angles, static_cast<size_t>(circles)));
    std::copy(p.begin(), p.end(), point);
  });
}

rlab_status rlab_surface_quadrature(const rlab_grid* grid, rlab_surface_fn fn, void* user, double* out) {
  return guarded([&] {
    need(grid, "grid");
    need(reinterpret_cast<const void*>(fn), "integrand");
    need(out, "out");
    put(rlab::surface_quadrature(grid->grid,
                                 [&](const rlab::TorusNode& node) {
                                   double v[2] = {0.0, 0.0};
                                   if (fn(node.angles.data(), node.point.data(), user, v) != 0) {
                                     rlab::fail(rlab::ErrorCode::kInvalidArgument, "integrand callback failed");
                                   }
                                   return std::complex<double>(v[0], v[1]);
                                 }),
        out);
  });
}

rlab_status rlab_function_gaussian(double scale, int dim, rlab_function** out) {
  return guarded([&] {
    need(out, "out");
    *out = new rlab_function{rlab::TestFunction::gaussian(scale, dim)};
  });
}

rlab_status rlab_function_knapp(double width, double center_angle, rlab_function** out) {
  return guarded([&] {
    need(out, "out");
    *out = new rlab_function{rlab::TestFunction::knapp_tube(width, center_angle)};
  });
}

rlab_status rlab_function_annular(double scale, rlab_function** out) {
  return guarded([&] {
    need(out, "out");
    *out = new rlab_function{rlab::TestFunction::annular_bump(scale)};
  });
}

rlab_status rlab_function_tensor(const rlab_function* const* factors, size_t count, rlab_function** out) {
  return guarded([&] {
    need(out, "out");
    need(factors, "factors");
    std::vector<rlab::TestFunction> fs;
    for (size_t i = 0; i < count; ++i) {
      need(factors[i], "factor");
      fs.push_back(factors[i]->f);
    }
    *out = new rlab_function{rlab::TestFunction::tensor(std::move(fs))};
  });
}

rlab_status rlab_function_parse(const char* spec, rlab_function** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new rlab_function{rlab::TestFunction::parse(spec)};
  });
}

rlab_status rlab_function_scaled(const rlab_function* f, double amplitude, rlab_function** out) {
  return guarded([&] {
    need(f, "function");
    need(out, "out");
    *out = new rlab_function{f->f.scaled(amplitude)};
  });
}

void rlab_function_destroy(rlab_function* f) { delete f; }

int rlab_function_dim(const rlab_function* f) { return f ? f->f.dim() : 0; }

rlab_status rlab_function_describe(const rlab_function* f, char* buffer, size_t capacity) {
  return guarded([&] {
    need(f, "function");
    copy_string(f->f.describe(), buffer, capacity);
  });
}

rlab_status rlab_function_evaluate(const rlab_function* f, const double* x, int dim, double* out) {
  return guarded([&] {
    need(f, "function");
    need(x, "x");
    need(out, "out");
    put(f->f.evaluate(std::span<const double>(x, static_cast<size_t>(dim))), out);
  });
}

rlab_status rlab_function_fourier(const rlab_function* f, const double* xi, int dim, double* out) {
  return guarded([&] {
    need(f, "function");
    need(xi, "xi");
    need(out, "out");
    put(f->f.fourier(std::span<const double>(xi, static_cast<size_t>(dim))), out);
  });
}

rlab_status rlab_function_lp_norm(const rlab_function* f, double p, double* out) {
  return guarded([&] {
    need(f, "function");
    need(out, "out");
    *out = f->f.lp_norm(p);
  });
}

rlab_status rlab_restrict_to_torus(const rlab_function* f, const rlab_grid* grid, rlab_samples** out) {
  return guarded([&] {
    need(f, "function");
    need(grid, "grid");
    need(out, "out");
    *out = new rlab_samples{rlab::restrict_ft_to_torus(f->f, grid->grid)};
  });
}

void rlab_samples_destroy(rlab_samples* samples) { delete samples; }

size_t rlab_samples_count(const rlab_samples* samples) { return samples ? samples->samples.values.size() : 0; }

const double* rlab_samples_values(const rlab_samples* samples) {
  if (!samples) return nullptr;
  return reinterpret_cast<const double*>(samples->samples.values.data());
}

rlab_status rlab_lq_surface_norm(const rlab_samples* samples, double q, double* out) {
  return guarded([&] {
    need(samples, "samples");
    need(out, "out");
    *out = rlab::lq_surface_norm(samples->samples, q);
  });
}

rlab_status rlab_partial_ft_factorized(const rlab_function* f, const double* xi, const double* eta, double* out) {
  return guarded([&] {
    need(f, "function");
    need(xi, "xi");
    need(eta, "eta");
    need(out, "out");
    put(rlab::partial_ft_factorized(f->f, std::span<const double>(xi, 2), std::span<const double>(eta, 2)), out);
  });
}

rlab_status rlab_numeric_ft(const rlab_function* f, const double* xi, int dim, double radius, int nodes_per_axis,
                            double* out) {
  return guarded([&] {
    need(f, "function");
    need(xi, "xi");
    need(out, "out");
    rlab::NumericFtConfig config;
    config.radius = radius;
    config.nodes_per_axis = nodes_per_axis;
    put(rlab::numeric_ft(f->f, std::span<const double>(xi, static_cast<size_t>(dim)), config), out);
  });
}

rlab_status rlab_numeric_ft_tail_bound(const rlab_function* f, double radius, double* out) {
  return guarded([&] {
    need(f, "function");
    need(out, "out");
    *out = rlab::numeric_ft_tail_bound(f->f, radius);
  });
}

rlab_status rlab_minkowski_check(const double* values, size_t rows, size_t cols, double p, double q,
                                 const double* surface_weights, const double* ambient_weights,
                                 rlab_minkowski_report* out) {
  return guarded([&] {
    need(values, "values");
    need(surface_weights, "surface weights");
    need(ambient_weights, "ambient weights");
    need(out, "out");
    const auto r = rlab::minkowski_check(std::span<const double>(values, rows * cols), p, q,
                                         std::span<const double>(surface_weights, rows),
                                         std::span<const double>(ambient_weights, cols));
    out->lhs = r.lhs;
    out->rhs = r.rhs;
    out->holds = r.holds ? 1 : 0;
    out->guaranteed = r.guaranteed ? 1 : 0;
  });
}

rlab_status rlab_extension_operator(rlab_density_fn density, void* user, const double* x, int dim,
                                    const rlab_grid* grid, double* out) {
  return guarded([&] {
    need(reinterpret_cast<const void*>(density), "density");
    need(x, "x");
    need(grid, "grid");
    need(out, "out");
    const int circles = grid->grid.circles();
    put(rlab::extension_operator(
            [&](std::span<const double> angles) {
              double v[2] = {0.0, 0.0};
              if (density(angles.data(), circles, user, v) != 0) {
                rlab::fail(rlab::ErrorCode::kInvalidArgument, "density callback failed");
              }
              return std::complex<double>(v[0], v[1]);
            },
            std::span<const double>(x, static_cast<size_t>(dim)), grid->grid),
        out);
  });
}

rlab_status rlab_extension_of_one(const double* x, int dim, double* out) {
  return guarded([&] {
    need(x, "x");
    need(out, "out");
    *out = rlab::extension_of_one(std::span<const double>(x, static_cast<size_t>(dim)));
  });
}

rlab_status rlab_bessel_j0(double r, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::bessel_j0(r);
  });
}

rlab_status rlab_bessel_j0_series(double r, double* out) {
  return guarded([&] {
    need(out, "out");
    rlab::require(r >= 0.0, "J0 argument must be >= 0");
    *out = rlab::bessel_j0_series(r);
  });
}

rlab_status rlab_bessel_j0_asymptotic(double r, double* out) {
  return guarded([&] {
    need(out, "out");
    rlab::require(r > 0.0, "asymptotic J0 needs r > 0");
    *out = rlab::bessel_j0_asymptotic(r);
  });
}

rlab_status rlab_bessel_j0_zero(int k, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = rlab::bessel_j0_zero(k);
  });
}

const char* rlab_growth_class_name(rlab_growth_class c) {
  return rlab::growth_class_name(static_cast<rlab::GrowthClass>(c));
}

void rlab_tail_config_init(rlab_tail_config* config) {
  if (!config) return;
  const rlab::TailProbeConfig d;
  config->p_prime = d.p_prime;
  config->rmax = d.rmax;
  config->radii = nullptr;
  config->radius_count = 0;
  config->factors = d.factors;
  config->nodes_per_panel = d.nodes_per_panel;
  config->flat_tolerance = d.flat_tolerance;
  config->increment_tolerance = d.increment_tolerance;
  config->log_fit_tolerance = d.log_fit_tolerance;
}

rlab_status rlab_tail_probe(const rlab_tail_config* config, rlab_tail** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    rlab::TailProbeConfig c;
    c.p_prime = config->p_prime;
    c.rmax = config->rmax;
    if (config->radius_count) {
      need(config->radii, "radii");
      c.radii.assign(config->radii, config->radii + config->radius_count);
    }
    c.factors = config->factors;
    c.nodes_per_panel = config->nodes_per_panel;
    c.flat_tolerance = config->flat_tolerance;
    c.increment_tolerance = config->increment_tolerance;
    c.log_fit_tolerance = config->log_fit_tolerance;
    *out = new rlab_tail{rlab::lp_tail_probe(c)};
  });
}

void rlab_tail_destroy(rlab_tail* tail) { delete tail; }

size_t rlab_tail_count(const rlab_tail* tail) { return tail ? tail->result.radii.size() : 0; }

rlab_status rlab_tail_row(const rlab_tail* tail, size_t i, double* radius, double* norm) {
  return guarded([&] {
    need(tail, "tail");
    rlab::require(i < tail->result.radii.size(), "row index out of range");
    if (radius) *radius = tail->result.radii[i];
    if (norm) *norm = tail->result.truncated_norms[i];
  });
}

rlab_growth_class rlab_tail_class(const rlab_tail* tail) {
  return static_cast<rlab_growth_class>(tail ? tail->result.growth_class : rlab::GrowthClass::kConverged);
}

double rlab_tail_slope(const rlab_tail* tail) { return tail ? tail->result.slope : 0.0; }

double rlab_tail_log_fit_residual(const rlab_tail* tail) { return tail ? tail->result.log_fit_residual : 0.0; }

double rlab_tail_last_increment(const rlab_tail* tail) { return tail ? tail->result.last_increment : 0.0; }

rlab_status rlab_ratio(const rlab_function* f, rlab_index p, rlab_index q, const rlab_grid* grid, double* out) {
  return guarded([&] {
    need(f, "function");
    need(grid, "grid");
    need(out, "out");
    *out = rlab::ratio(f->f, rlab::ExponentPair(from_c(p), from_c(q)), grid->grid);
  });
}

rlab_status rlab_separable_ratio(const rlab_function* f, rlab_index p, rlab_index q, int nodes_per_circle,
                                 double* out) {
  return guarded([&] {
    need(f, "function");
    need(out, "out");
    *out = rlab::separable_ratio(f->f, rlab::ExponentPair(from_c(p), from_c(q)), nodes_per_circle);
  });
}

int rlab_default_nodes_per_circle(double delta_min) {
  return delta_min > 0.0 ? rlab::default_nodes_per_circle(delta_min) : 0;
}

rlab_status rlab_knapp_sweep(rlab_index p, rlab_index q, const double* deltas, size_t count, int factors,
                             int nodes_per_circle, rlab_sweep** out) {
  return guarded([&] {
    need(deltas, "deltas");
    need(out, "out");
    *out = new rlab_sweep{rlab::knapp_sweep(rlab::ExponentPair(from_c(p), from_c(q)),
                                            std::vector<double>(deltas, deltas + count), factors, nodes_per_circle)};
  });
}

rlab_status rlab_dilation_probe(rlab_index p, rlab_index q, const double* scales, size_t count, int factors,
                                int nodes_per_circle, rlab_sweep** out) {
  return guarded([&] {
    need(scales, "scales");
    need(out, "out");
    *out = new rlab_sweep{rlab::dilation_p_probe(rlab::ExponentPair(from_c(p), from_c(q)),
                                                 std::vector<double>(scales, scales + count), factors,
                                                 nodes_per_circle)};
  });
}

void rlab_sweep_destroy(rlab_sweep* sweep) { delete sweep; }

void rlab_sweep_summary_get(const rlab_sweep* sweep, rlab_sweep_summary* out) {
  if (!sweep || !out) return;
  const auto& r = sweep->result;
  out->factors = r.factors;
  out->nodes_per_circle = r.nodes_per_circle;
  out->rows = r.rows.size();
  out->slope = r.slope;
  out->residual = r.residual;
  out->growth_slope = r.growth_slope;
  out->expected_growth = r.expected_growth;
  out->expected_slope = r.expected_slope;
}

rlab_status rlab_sweep_row(const rlab_sweep* sweep, size_t i, double* parameter, double* ratio) {
  return guarded([&] {
    need(sweep, "sweep");
    rlab::require(i < sweep->result.rows.size(), "row index out of range");
    if (parameter) *parameter = sweep->result.rows[i].parameter;
    if (ratio) *ratio = sweep->result.rows[i].ratio;
  });
}

const char* rlab_sweep_family(const rlab_sweep* sweep) { return sweep ? sweep->result.family.c_str() : ""; }

const char* rlab_cell_status_name(rlab_cell_status s) {
  return rlab::cell_status_name(static_cast<rlab::CellStatus>(s));
}

void rlab_region_config_init(rlab_region_config* config) {
  if (!config) return;
  const rlab::RegionConfig d;
  config->factors = d.factors;
  config->deltas = nullptr;
  config->delta_count = 0;
  config->scales = nullptr;
  config->scale_count = 0;
  config->threshold = d.threshold;
  config->boundary_margin = d.boundary_margin;
  config->nodes_per_circle = d.nodes_per_circle;
}

rlab_status rlab_classify_region(const rlab_index* ps, size_t p_count, const rlab_index* qs, size_t q_count,
                                 const rlab_region_config* config, rlab_region** out) {
  return guarded([&] {
    need(out, "out");
    *out = new rlab_region{rlab::classify_region(region_config(ps, p_count, qs, q_count, config))};
  });
}

void rlab_region_destroy(rlab_region* region) { delete region; }

size_t rlab_region_cell_count(const rlab_region* region) { return region ? region->result.cells.size() : 0; }

rlab_status rlab_region_cell_get(const rlab_region* region, size_t i, rlab_region_cell* out) {
  return guarded([&] {
    need(region, "region");
    need(out, "out");
    rlab::require(i < region->result.cells.size(), "cell index out of range");
    const auto& c = region->result.cells[i];
    out->p = to_c(c.p);
    out->q = to_c(c.q);
    out->knapp_growth = c.knapp_growth;
    out->dilation_growth = c.dilation_growth;
    out->status = static_cast<rlab_cell_status>(c.status);
    out->predicted_admissible = c.predicted_admissible ? 1 : 0;
    out->agrees = c.agrees ? 1 : 0;
  });
}

size_t rlab_region_classified(const rlab_region* region) { return region ? region->result.classified : 0; }

size_t rlab_region_agreeing(const rlab_region* region) { return region ? region->result.agreeing : 0; }

double rlab_region_agreement_percent(const rlab_region* region) {
  return region ? region->result.agreement_percent() : 0.0;
}

int rlab_region_nodes_per_circle(const rlab_region* region) { return region ? region->result.nodes_per_circle : 0; }

int rlab_region_factors(const rlab_region* region) { return region ? region->result.factors : 0; }

rlab_status rlab_dimension_independence(const int* dims, size_t dim_count, const rlab_index* ps, size_t p_count,
                                        const rlab_index* qs, size_t q_count, const rlab_region_config* config,
                                        rlab_dimension_report** out) {
  return guarded([&] {
    need(dims, "dims");
    need(out, "out");
    auto report = rlab::dimension_independence(std::vector<int>(dims, dims + dim_count),
                                               region_config(ps, p_count, qs, q_count, config));
    auto* r = new rlab_dimension_report{std::move(report), {}};
    for (const auto& t : r->report.tables) r->tables.push_back(rlab_region{t});
    *out = r;
  });
}

void rlab_dimension_report_destroy(rlab_dimension_report* report) { delete report; }

size_t rlab_dimension_report_table_count(const rlab_dimension_report* report) {
  return report ? report->tables.size() : 0;
}

const rlab_region* rlab_dimension_report_table(const rlab_dimension_report* report, size_t i) {
  if (!report || i >= report->tables.size()) return nullptr;
  return &report->tables[i];
}

size_t rlab_dimension_report_differing(const rlab_dimension_report* report) {
  return report ? report->report.differing_cells.size() : 0;
}

rlab_status rlab_tensor_factorization_check(const rlab_function* g, const rlab_function* h, rlab_index p,
                                            rlab_index q, int nodes_per_circle, double* out) {
  return guarded([&] {
    need(g, "g");
    need(h, "h");
    need(out, "out");
    *out = rlab::tensor_factorization_check(g->f, h->f, rlab::ExponentPair(from_c(p), from_c(q)),
                                            nodes_per_circle);
  });
}

}  // extern "C"
