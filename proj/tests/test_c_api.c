#include <math.h>
#include <stdio.h>
#include <string.h>

#include "restriction_lab/restriction_lab.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int cosine_mode(const double* angles, const double* point, void* user, double* value) {
  (void)point;
  const double r = *(const double*)user;
  const double phase = 2.0 * M_PI * r * cos(2.0 * M_PI * angles[0]);
  value[0] = cos(phase);
  value[1] = sin(phase);
  return 0;
}

static int refuse(const double* angles, const double* point, void* user, double* value) {
  (void)angles;
  (void)point;
  (void)user;
  (void)value;
  return 1;
}

static void test_indices(void) {
  rlab_index p;
  rlab_index pc;
  EXPECT(rlab_index_parse("4/3", &p) == RLAB_OK);
  EXPECT(p.exact && p.num == 4 && p.den == 3);
  EXPECT(rlab_conjugate(p, &pc) == RLAB_OK);
  EXPECT(pc.num == 4 && pc.den == 1);
  rlab_index q;
  rlab_index_parse("1", &q);
  int adm = -1;
  EXPECT(rlab_torus_admissible(p, q, &adm) == RLAB_OK && adm == 0);
  rlab_index_parse("1.2", &p);
  rlab_index_parse("2", &q);
  EXPECT(rlab_torus_admissible(p, q, &adm) == RLAB_OK && adm == 1);
  char buf[32];
  EXPECT(rlab_index_str(p, buf, sizeof buf) == RLAB_OK);
  EXPECT(strcmp(buf, "6/5") == 0 || strcmp(buf, "1.2") == 0);

  EXPECT(rlab_index_parse("0.5", &p) == RLAB_INVALID_ARGUMENT);
  EXPECT(strstr(rlab_last_error(), "Lebesgue index must be") != NULL);
  EXPECT(rlab_index_parse("2", &p) == RLAB_OK);
  EXPECT(strcmp(rlab_last_error(), "") == 0);

  rlab_index lo;
  rlab_index hi;
  rlab_index out[4];
  size_t count = 0;
  rlab_index_parse("1", &lo);
  rlab_index_parse("1.6", &hi);
  EXPECT(rlab_index_range(lo, hi, "0.05", out, 4, &count) == RLAB_OK);
  EXPECT(count == 13);
  EXPECT(out[3].num == 23 && out[3].den == 20);
}

static void test_grid(void) {
  rlab_grid* grid = NULL;
  EXPECT(rlab_grid_create(1, 64, &grid) == RLAB_OK);
  EXPECT(rlab_grid_node_count(grid) == 64);
  double r = 1.0;
  double value[2];
  EXPECT(rlab_surface_quadrature(grid, cosine_mode, &r, value) == RLAB_OK);
  double j0 = 0.0;
  rlab_bessel_j0_series(2.0 * M_PI, &j0);
  EXPECT(fabs(value[0] - j0) < 1e-12);
  EXPECT(fabs(value[1]) < 1e-14);
  EXPECT(rlab_surface_quadrature(grid, refuse, NULL, value) != RLAB_OK);
  rlab_grid_destroy(grid);
  EXPECT(rlab_grid_create(1, 2, &grid) == RLAB_INVALID_ARGUMENT);
  EXPECT(rlab_grid_create(8, 1024, &grid) == RLAB_GRID_TOO_LARGE);
}

static void test_functions(void) {
  rlab_function* g = NULL;
  EXPECT(rlab_function_gaussian(1.0, 2, &g) == RLAB_OK);
  const double xi[2] = {1.0, 0.0};
  double ft[2];
  EXPECT(rlab_function_fourier(g, xi, 2, ft) == RLAB_OK);
  EXPECT(fabs(ft[0] - exp(-M_PI)) < 1e-15);
  double num[2];
  EXPECT(rlab_numeric_ft(g, xi, 2, 6.0, 128, num) == RLAB_OK);
  EXPECT(fabs(num[0] - exp(-M_PI)) < 1e-10);
  EXPECT(rlab_function_fourier(g, xi, 3, ft) == RLAB_DIMENSION_MISMATCH);

  rlab_function* k = NULL;
  EXPECT(rlab_function_parse("knapp:1/8", &k) == RLAB_OK);
  rlab_index p;
  rlab_index q;
  rlab_index_parse("1.2", &p);
  rlab_index_parse("2", &q);
  double err = 1.0;
  EXPECT(rlab_tensor_factorization_check(k, g, p, q, 256, &err) == RLAB_OK);
  EXPECT(err < 1e-10);
  rlab_function_destroy(k);
  rlab_function* bad = NULL;
  EXPECT(rlab_function_parse("knapp:3", &bad) == RLAB_INVALID_ARGUMENT);
  EXPECT(bad == NULL);
  rlab_function_destroy(g);
}

static void test_tail(void) {
  rlab_tail_config c;
  rlab_tail_config_init(&c);
  c.p_prime = 4.5;
  rlab_tail* t = NULL;
  EXPECT(rlab_tail_probe(&c, &t) == RLAB_OK);
  EXPECT(rlab_tail_class(t) == RLAB_GROWTH_CONVERGED);
  EXPECT(rlab_tail_count(t) >= 4);
  double radius = 0.0;
  double norm = 0.0;
  EXPECT(rlab_tail_row(t, rlab_tail_count(t) - 1, &radius, &norm) == RLAB_OK);
  EXPECT(radius == 200.0 && norm > 0.0);
  EXPECT(rlab_tail_row(t, 99, &radius, &norm) == RLAB_INVALID_ARGUMENT);
  rlab_tail_destroy(t);
}

static void test_region(void) {
  rlab_index ps[2];
  rlab_index qs[2];
  rlab_index_parse("1.1", &ps[0]);
  rlab_index_parse("1.5", &ps[1]);
  rlab_index_parse("1", &qs[0]);
  rlab_index_parse("3.5", &qs[1]);
  rlab_region_config c;
  rlab_region_config_init(&c);
  rlab_region* r = NULL;
  EXPECT(rlab_classify_region(ps, 2, qs, 2, &c, &r) == RLAB_OK);
  EXPECT(rlab_region_cell_count(r) == 4);
  EXPECT(rlab_region_agreement_percent(r) == 100.0);
  rlab_region_cell cell;
  EXPECT(rlab_region_cell_get(r, 0, &cell) == RLAB_OK);
  EXPECT(cell.status == RLAB_CELL_CONSISTENT && cell.predicted_admissible);
  EXPECT(rlab_region_cell_get(r, 2, &cell) == RLAB_OK);
  EXPECT(cell.status == RLAB_CELL_INADMISSIBLE);
  rlab_region_destroy(r);

  rlab_sweep* s = NULL;
  const double deltas[3] = {0.25, 0.125, 0.0625};
  EXPECT(rlab_knapp_sweep(ps[0], qs[0], deltas, 3, 2, 0, &s) == RLAB_INVALID_ARGUMENT);
}

int main(void) {
  test_indices();
  test_grid();
  test_functions();
  test_tail();
  test_region();
  EXPECT(rlab_grid_node_count(NULL) == 0);
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("c api ok\n");
  return 0;
}
