#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rlab {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rules are cached per order and shared between threads.
const GaussLegendreRule& gauss_legendre(int order);

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

// Splits [0, count) into fixed chunks of `chunk` items and calls
// body(chunk_index, begin, end) for each, possibly on several threads. Chunk
// boundaries do not depend on the thread count, so reductions over per-chunk
// results in chunk order are deterministic.
void parallel_chunks(std::size_t count, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

std::size_t chunk_count(std::size_t count, std::size_t chunk);

// Integral of g over [edges[i], edges[i+1]] for each panel, Gauss-Legendre
// with `order` nodes. Edges must be increasing.
std::vector<double> integrate_panels(const std::function<double(double)>& g,
                                     std::span<const double> edges, int order);

// Ordinary least squares y = slope * x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  // Root-mean-square of the fit residuals, in the units of y.
  double rms_residual = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace rlab
