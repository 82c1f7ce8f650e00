#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rlab {

// Knapp tube rectangle half-widths are a/delta (tangential) and b/delta^2
// (normal). With a = b = 1/(8 pi) the transform stays above |R|/2 on the cap
// |k - k0| <= delta / (2 pi).
inline constexpr double kKnappTangential = 1.0 / (8.0 * std::numbers::pi);
inline constexpr double kKnappNormal = 1.0 / (8.0 * std::numbers::pi);

enum class FamilyKind { kGaussian, kKnappTube, kAnnularBump, kTensor };

// exp(-pi |x|^2 / s^2) on R^d.
struct GaussianParams {
  double scale;
  int dim;
};

// exp(2 pi i x.xi0) times the indicator of the rectangle dual to the cap of
// width `width` centred at angle `center`, on R^2.
struct KnappParams {
  double width;
  double center;
};

// J0(2 pi |x|) exp(-pi |x|^2 / s^2) on R^2: the circle extension windowed at
// scale s, whose transform is a bump of width ~1/s around the unit circle.
struct AnnularParams {
  double scale;
};

class TestFunction {
 public:
  static TestFunction gaussian(double scale, int dim);
  static TestFunction knapp_tube(double width, double center_angle = 0.0);
  static TestFunction annular_bump(double scale);
  static TestFunction tensor(std::vector<TestFunction> factors);
  // "gaussian:s[:d]", "knapp:delta[:k0]", "annular:s", factors joined by '*'.
  static TestFunction parse(std::string_view spec);

  // Same function multiplied by c > 0.
  TestFunction scaled(double c) const;

  FamilyKind kind() const;
  int dim() const;
  double amplitude() const { return amplitude_; }
  std::string describe() const;

  const GaussianParams& gaussian_params() const;
  const KnappParams& knapp_params() const;
  const AnnularParams& annular_params() const;
  // Tensor factors; empty for the other kinds.
  std::span<const TestFunction> factors() const;

  // Knapp rectangle half-widths and area |R| = 4 a b / delta^3.
  double knapp_half_tangential() const;
  double knapp_half_normal() const;
  double knapp_area() const;

  std::complex<double> evaluate(std::span<const double> x) const;
  // Transform with kernel exp(-2 pi i x.xi).
  std::complex<double> fourier(std::span<const double> xi) const;
  double lp_norm(double p) const;

 private:
  struct Tensor {
    std::vector<TestFunction> factors;
  };
  using Data = std::variant<GaussianParams, KnappParams, AnnularParams, Tensor>;

  TestFunction(Data data, double amplitude) : data_(std::move(data)), amplitude_(amplitude) {}

  Data data_;
  double amplitude_ = 1.0;
};

std::complex<double> evaluate(const TestFunction& f, std::span<const double> x);
std::complex<double> fourier_closed_form(const TestFunction& f, std::span<const double> xi);
double lp_norm_closed_form(const TestFunction& f, double p);

// sin(u)/u with the removable singularity filled in.
double sinc(double u);

// ||J0(2 pi |x|) exp(-pi |x|^2/s^2)||_{L^p(R^2)}^p by radial quadrature on
// panels between consecutive zeros of J0(2 pi r).
double annular_bump_lp_power(double scale, double p);

}  // namespace rlab
