#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace rlab {

// bessel_j0 switches from the power series to the Hankel expansion above
// this argument.
inline constexpr double kBesselSeriesCutoff = 12.0;

// J0(r) = sum_k (-1)^k (r^2/4)^k / (k!)^2, summed until past the peak term
// and |term| < tolerance. Templated so tests can run it in extended precision.
template <class Real>
Real bessel_j0_series(const Real& r, const Real& tolerance) {
  using std::abs;
  const Real quarter_r2 = r * r / 4;
  Real term = 1;
  Real sum = 1;
  for (int k = 1; k < 100000; ++k) {
    term = -term * quarter_r2 / (Real(k) * Real(k));
    sum += term;
    if (Real(k) > quarter_r2 && abs(term) < tolerance) break;
  }
  return sum;
}

inline double bessel_j0_series(double r) { return bessel_j0_series<double>(r, 1e-17); }

// Large-argument expansion sqrt(2/(pi r)) (P cos(r - pi/4) - Q sin(r - pi/4)),
// truncated at the smallest term. Accurate to ~e^{-2r}.
double bessel_j0_asymptotic(double r);

// Series for r <= 12, asymptotic beyond. Rejects r < 0.
double bessel_j0(double r);

// exp(-x) I0(x) for x >= 0, stable for large x.
double scaled_bessel_i0(double x);

// Bisection for a sign change of f on [lo, hi].
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tolerance = 1e-15);

// k-th positive zero of J0 (k >= 1), refined by bisection on bessel_j0.
double bessel_j0_zero(int k);

// All positive zeros of J0 strictly below x, in increasing order.
std::vector<double> bessel_j0_zeros_below(double x);

}  // namespace rlab
