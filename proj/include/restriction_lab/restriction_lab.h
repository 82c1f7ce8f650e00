#ifndef RESTRICTION_LAB_H
#define RESTRICTION_LAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(RLAB_BUILDING_LIBRARY)
#define RLAB_API __attribute__((visibility("default")))
#else
#define RLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rlab_status {
  RLAB_OK = 0,
  RLAB_INVALID_ARGUMENT = 1,
  RLAB_DIMENSION_MISMATCH = 2,
  RLAB_UNDER_RESOLVED = 3,
  RLAB_INSUFFICIENT_TRUNCATION = 4,
  RLAB_FACTORIZATION_MISMATCH = 5,
  RLAB_INCONCLUSIVE = 6,
  RLAB_ZERO_NORM = 7,
  RLAB_GRID_TOO_LARGE = 8,
  RLAB_INTERNAL = 9
} rlab_status;

/* Message of the last failed call on this thread; "" after success. */
RLAB_API const char* rlab_last_error(void);
RLAB_API const char* rlab_status_name(rlab_status status);
RLAB_API const char* rlab_version(void);

/* ---- exponents ---- */

/* A Lebesgue index. When exact is nonzero, num/den is authoritative. */
typedef struct rlab_index {
  double value;
  int64_t num;
  int64_t den;
  int exact;
  int infinite;
} rlab_index;

/* Accepts "4/3", "1.05", "2^-3", "inf". Rejects values below 1. */
RLAB_API rlab_status rlab_index_parse(const char* text, rlab_index* out);
RLAB_API rlab_status rlab_index_from_double(double value, rlab_index* out);
RLAB_API rlab_status rlab_index_str(rlab_index index, char* buffer, size_t capacity);
RLAB_API rlab_status rlab_conjugate(rlab_index p, rlab_index* out);

/* lo, lo + step, ... up to hi. Writes at most capacity entries; *count gets
   the full length. */
RLAB_API rlab_status rlab_index_range(rlab_index lo, rlab_index hi, const char* step, rlab_index* out,
                                      size_t capacity, size_t* count);

RLAB_API rlab_status rlab_torus_admissible(rlab_index p, rlab_index q, int* out);
RLAB_API rlab_status rlab_sphere_conjecture_region(int ambient_dim, rlab_index p, rlab_index q, int* out);
RLAB_API rlab_status rlab_dual_extension_region(rlab_index p_prime, rlab_index q_prime, int* out);
RLAB_API rlab_status rlab_knapp_growth_exponent(rlab_index p, rlab_index q, int factors, double* out);
RLAB_API rlab_status rlab_dilation_growth_exponent(rlab_index p, int factors, double* out);
RLAB_API rlab_status rlab_boundary_distance(double p, double q, double* out);

/* Parses a number as the CLI does: decimals, fractions, b^k. */
RLAB_API rlab_status rlab_parse_scalar(const char* text, double* out);

/* ---- geometry ---- */

typedef struct rlab_grid rlab_grid;

RLAB_API rlab_status rlab_grid_create(int circles, int nodes_per_circle, rlab_grid** out);
RLAB_API void rlab_grid_destroy(rlab_grid* grid);
RLAB_API size_t rlab_grid_node_count(const rlab_grid* grid);
RLAB_API int rlab_grid_ambient_dim(const rlab_grid* grid);
RLAB_API double rlab_grid_weight(const rlab_grid* grid);
RLAB_API rlab_status rlab_grid_node_point(const rlab_grid* grid, size_t index, double* point);
RLAB_API rlab_status rlab_torus_point(const double* angles, int circles, double* point);

/* Integrand callback: angles has `circles` entries, point 2*circles. Writes
   the complex value to value[0], value[1]. Return nonzero to abort. */
typedef int (*rlab_surface_fn)(const double* angles, const double* point, void* user, double* value);

RLAB_API rlab_status rlab_surface_quadrature(const rlab_grid* grid, rlab_surface_fn fn, void* user, double* out);

/* ---- test functions ---- */

typedef struct rlab_function rlab_function;

RLAB_API rlab_status rlab_function_gaussian(double scale, int dim, rlab_function** out);
RLAB_API rlab_status rlab_function_knapp(double width, double center_angle, rlab_function** out);
RLAB_API rlab_status rlab_function_annular(double scale, rlab_function** out);
RLAB_API rlab_status rlab_function_tensor(const rlab_function* const* factors, size_t count, rlab_function** out);
/* "gaussian:s[:d]", "knapp:delta[:k0]", "annular:s", joined by '*'. */
RLAB_API rlab_status rlab_function_parse(const char* spec, rlab_function** out);
RLAB_API rlab_status rlab_function_scaled(const rlab_function* f, double amplitude, rlab_function** out);
RLAB_API void rlab_function_destroy(rlab_function* f);
RLAB_API int rlab_function_dim(const rlab_function* f);
RLAB_API rlab_status rlab_function_describe(const rlab_function* f, char* buffer, size_t capacity);
RLAB_API rlab_status rlab_function_evaluate(const rlab_function* f, const double* x, int dim, double* out);
RLAB_API rlab_status rlab_function_fourier(const rlab_function* f, const double* xi, int dim, double* out);
RLAB_API rlab_status rlab_function_lp_norm(const rlab_function* f, double p, double* out);

/* ---- fourier ---- */

typedef struct rlab_samples rlab_samples;

RLAB_API rlab_status rlab_restrict_to_torus(const rlab_function* f, const rlab_grid* grid, rlab_samples** out);
RLAB_API void rlab_samples_destroy(rlab_samples* samples);
RLAB_API size_t rlab_samples_count(const rlab_samples* samples);
/* Interleaved real/imaginary parts, 2 * count doubles. */
RLAB_API const double* rlab_samples_values(const rlab_samples* samples);
RLAB_API rlab_status rlab_lq_surface_norm(const rlab_samples* samples, double q, double* out);

RLAB_API rlab_status rlab_partial_ft_factorized(const rlab_function* f, const double* xi, const double* eta,
                                                double* out);
RLAB_API rlab_status rlab_numeric_ft(const rlab_function* f, const double* xi, int dim, double radius,
                                     int nodes_per_axis, double* out);
RLAB_API rlab_status rlab_numeric_ft_tail_bound(const rlab_function* f, double radius, double* out);

/* ---- norms ---- */

typedef struct rlab_minkowski_report {
  double lhs;
  double rhs;
  int holds;
  int guaranteed;
} rlab_minkowski_report;

/* values is row-major rows x cols; rows index the surface, cols the ambient space. */
RLAB_API rlab_status rlab_minkowski_check(const double* values, size_t rows, size_t cols, double p, double q,
                                          const double* surface_weights, const double* ambient_weights,
                                          rlab_minkowski_report* out);

/* ---- extension ---- */

typedef int (*rlab_density_fn)(const double* angles, int circles, void* user, double* value);

RLAB_API rlab_status rlab_extension_operator(rlab_density_fn density, void* user, const double* x, int dim,
                                             const rlab_grid* grid, double* out);
RLAB_API rlab_status rlab_extension_of_one(const double* x, int dim, double* out);
RLAB_API rlab_status rlab_bessel_j0(double r, double* out);
RLAB_API rlab_status rlab_bessel_j0_series(double r, double* out);
RLAB_API rlab_status rlab_bessel_j0_asymptotic(double r, double* out);
RLAB_API rlab_status rlab_bessel_j0_zero(int k, double* out);

typedef enum rlab_growth_class {
  RLAB_GROWTH_CONVERGED = 0,
  RLAB_GROWTH_LOGARITHMIC = 1,
  RLAB_GROWTH_POLYNOMIAL = 2
} rlab_growth_class;

RLAB_API const char* rlab_growth_class_name(rlab_growth_class c);

typedef struct rlab_tail_config {
  double p_prime;
  /* Used when radius_count is 0: dyadic radii rmax, rmax/2, ... >= 3. */
  double rmax;
  const double* radii;
  size_t radius_count;
  int factors;
  int nodes_per_panel;
  double flat_tolerance;
  double increment_tolerance;
  double log_fit_tolerance;
} rlab_tail_config;

typedef struct rlab_tail rlab_tail;

RLAB_API void rlab_tail_config_init(rlab_tail_config* config);
RLAB_API rlab_status rlab_tail_probe(const rlab_tail_config* config, rlab_tail** out);
RLAB_API void rlab_tail_destroy(rlab_tail* tail);
RLAB_API size_t rlab_tail_count(const rlab_tail* tail);
RLAB_API rlab_status rlab_tail_row(const rlab_tail* tail, size_t i, double* radius, double* norm);
RLAB_API rlab_growth_class rlab_tail_class(const rlab_tail* tail);
RLAB_API double rlab_tail_slope(const rlab_tail* tail);
RLAB_API double rlab_tail_log_fit_residual(const rlab_tail* tail);
RLAB_API double rlab_tail_last_increment(const rlab_tail* tail);

/* ---- experiments ---- */

RLAB_API rlab_status rlab_ratio(const rlab_function* f, rlab_index p, rlab_index q, const rlab_grid* grid,
                                double* out);
RLAB_API rlab_status rlab_separable_ratio(const rlab_function* f, rlab_index p, rlab_index q,
                                          int nodes_per_circle, double* out);
RLAB_API int rlab_default_nodes_per_circle(double delta_min);

typedef struct rlab_sweep rlab_sweep;

typedef struct rlab_sweep_summary {
  int factors;
  int nodes_per_circle;
  size_t rows;
  double slope;
  double residual;
  double growth_slope;
  double expected_growth;
  double expected_slope;
} rlab_sweep_summary;

/* nodes_per_circle 0 picks max(256, ceil(16 pi / delta_min)). */
RLAB_API rlab_status rlab_knapp_sweep(rlab_index p, rlab_index q, const double* deltas, size_t count, int factors,
                                      int nodes_per_circle, rlab_sweep** out);
RLAB_API rlab_status rlab_dilation_probe(rlab_index p, rlab_index q, const double* scales, size_t count,
                                         int factors, int nodes_per_circle, rlab_sweep** out);
RLAB_API void rlab_sweep_destroy(rlab_sweep* sweep);
RLAB_API void rlab_sweep_summary_get(const rlab_sweep* sweep, rlab_sweep_summary* out);
RLAB_API rlab_status rlab_sweep_row(const rlab_sweep* sweep, size_t i, double* parameter, double* ratio);
RLAB_API const char* rlab_sweep_family(const rlab_sweep* sweep);

typedef enum rlab_cell_status {
  RLAB_CELL_CONSISTENT = 0,
  RLAB_CELL_INADMISSIBLE = 1,
  RLAB_CELL_BOUNDARY = 2
} rlab_cell_status;

RLAB_API const char* rlab_cell_status_name(rlab_cell_status s);

typedef struct rlab_region_config {
  int factors;
  /* Empty lists select 2^-2..2^-7 and 1, 2, 4, 8, 16. */
  const double* deltas;
  size_t delta_count;
  const double* scales;
  size_t scale_count;
  double threshold;
  double boundary_margin;
  int nodes_per_circle;
} rlab_region_config;

typedef struct rlab_region_cell {
  rlab_index p;
  rlab_index q;
  double knapp_growth;
  double dilation_growth;
  rlab_cell_status status;
  int predicted_admissible;
  int agrees;
} rlab_region_cell;

typedef struct rlab_region rlab_region;

RLAB_API void rlab_region_config_init(rlab_region_config* config);
RLAB_API rlab_status rlab_classify_region(const rlab_index* ps, size_t p_count, const rlab_index* qs, size_t q_count,
                                          const rlab_region_config* config, rlab_region** out);
RLAB_API void rlab_region_destroy(rlab_region* region);
RLAB_API size_t rlab_region_cell_count(const rlab_region* region);
RLAB_API rlab_status rlab_region_cell_get(const rlab_region* region, size_t i, rlab_region_cell* out);
RLAB_API size_t rlab_region_classified(const rlab_region* region);
RLAB_API size_t rlab_region_agreeing(const rlab_region* region);
RLAB_API double rlab_region_agreement_percent(const rlab_region* region);
RLAB_API int rlab_region_nodes_per_circle(const rlab_region* region);
RLAB_API int rlab_region_factors(const rlab_region* region);

typedef struct rlab_dimension_report rlab_dimension_report;

RLAB_API rlab_status rlab_dimension_independence(const int* dims, size_t dim_count, const rlab_index* ps,
                                                 size_t p_count, const rlab_index* qs, size_t q_count,
                                                 const rlab_region_config* config, rlab_dimension_report** out);
RLAB_API void rlab_dimension_report_destroy(rlab_dimension_report* report);
RLAB_API size_t rlab_dimension_report_table_count(const rlab_dimension_report* report);
/* Borrowed; valid until the report is destroyed. */
RLAB_API const rlab_region* rlab_dimension_report_table(const rlab_dimension_report* report, size_t i);
RLAB_API size_t rlab_dimension_report_differing(const rlab_dimension_report* report);

RLAB_API rlab_status rlab_tensor_factorization_check(const rlab_function* g, const rlab_function* h, rlab_index p,
                                                     rlab_index q, int nodes_per_circle, double* out);

#ifdef __cplusplus
}
#endif

#endif
