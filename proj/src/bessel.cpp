#include "restriction_lab/bessel.hpp"

#include <limits>
#include <mutex>
#include <numbers>

#include "restriction_lab/error.hpp"

namespace rlab {

double bessel_j0_asymptotic(double r) {
  require(r > 0.0, "asymptotic J0 needs r > 0");
  // a_k = prod_{j<=k} (-(2j-1)^2) / (k! 8^k); P takes even k, Q odd k, with
  // alternating signs.
  double p = 0.0;
  double q = 0.0;
  double a = 1.0;
  double inv_r_pow = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    double term = a * inv_r_pow;
    double mag = std::abs(term);
    if (mag > prev) break;
    prev = mag;
    // (-1)^{floor(k/2)} sign pattern.
    double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    if (mag < 1e-17) break;
    double odd = 2.0 * k + 1.0;
    a *= -(odd * odd) / (8.0 * (k + 1));
    inv_r_pow /= r;
  }
  // cos(r - pi/4) and sin(r - pi/4) without forming r - pi/4.
  const double c = std::cos(r);
  const double s = std::sin(r);
  const double cos_chi = (c + s) * std::numbers::sqrt2 / 2.0;
  const double sin_chi = (s - c) * std::numbers::sqrt2 / 2.0;
  return std::sqrt(2.0 / (std::numbers::pi * r)) * (p * cos_chi - q * sin_chi);
}

double bessel_j0(double r) {
  if (!(r >= 0.0)) fail(ErrorCode::kInvalidArgument, "bessel_j0 needs r >= 0");
  if (r <= kBesselSeriesCutoff) return bessel_j0_series(r);
  return bessel_j0_asymptotic(r);
}

double scaled_bessel_i0(double x) {
  if (!(x >= 0.0)) fail(ErrorCode::kInvalidArgument, "scaled_bessel_i0 needs x >= 0");
  if (x == 0.0) return 1.0;
  // Periodic trapezoid for (1/2pi) int exp(x (cos t - 1)) dt; the aliasing
  // error is ~ I_N(x)/I_0(x) ~ exp(-N^2 / 2x).
  const int n = 32 + static_cast<int>(std::ceil(12.0 * std::sqrt(x)));
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = std::sin(std::numbers::pi * j / n);
    sum += std::exp(-2.0 * x * s * s);
  }
  return sum / n;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  double flo = f(lo);
  double fhi = f(hi);
  require(flo == 0.0 || fhi == 0.0 || (flo < 0.0) != (fhi < 0.0),
          "bisect_root: no sign change on bracket");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > tolerance * std::max(1.0, std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

double refine_zero(int k) {
  // McMahon: beta + 1/(8 beta) - 124 / (3 (8 beta)^3), beta = (k - 1/4) pi.
  const double beta = (k - 0.25) * std::numbers::pi;
  const double e = 8.0 * beta;
  const double guess = beta + 1.0 / e - 124.0 / (3.0 * e * e * e);
  double width = 0.02;
  for (;;) {
    double lo = guess - width;
    double hi = guess + width;
    if ((bessel_j0(lo) < 0.0) != (bessel_j0(hi) < 0.0)) {
      return bisect_root([](double r) { return bessel_j0(r); }, lo, hi);
    }
    width *= 2.0;
    require(width < 1.0, "bessel_j0_zero: failed to bracket");
  }
}

std::mutex zero_mutex;
std::vector<double> zero_cache;

void extend_zeros(std::size_t count) {
  while (zero_cache.size() < count) {
    zero_cache.push_back(refine_zero(static_cast<int>(zero_cache.size()) + 1));
  }
}

}  // namespace

double bessel_j0_zero(int k) {
  require(k >= 1, "bessel_j0_zero: k must be >= 1");
  std::lock_guard<std::mutex> lock(zero_mutex);
  extend_zeros(static_cast<std::size_t>(k));
  return zero_cache[k - 1];
}

std::vector<double> bessel_j0_zeros_below(double x) {
  std::lock_guard<std::mutex> lock(zero_mutex);
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    extend_zeros(i + 1);
    if (zero_cache[i] >= x) break;
    out.push_back(zero_cache[i]);
  }
  return out;
}

}  // namespace rlab
