#include "restriction_lab/functions.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "restriction_lab/bessel.hpp"
#include "restriction_lab/error.hpp"
#include "restriction_lab/exponents.hpp"
#include "restriction_lab/quadrature.hpp"

namespace rlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void check_dim(const TestFunction& f, std::size_t got) {
  if (static_cast<int>(got) != f.dim()) {
    fail(ErrorCode::kDimensionMismatch, f.describe() + " has dimension " + std::to_string(f.dim()) +
                                            ", point has " + std::to_string(got));
  }
}

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double sinc(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double annular_bump_lp_power(double scale, double p) {
  require(scale > 0.0, "annular bump scale must be positive");
  require(p >= 1.0 && std::isfinite(p), "annular bump norm needs finite p >= 1");
  // Window below 1e-18 beyond this radius.
  const double cutoff = scale * std::sqrt(18.0 * std::log(10.0) / (p * kPi));
  std::vector<double> zeros{0.0};
  for (double z : bessel_j0_zeros_below(kTwoPi * cutoff)) zeros.push_back(z / kTwoPi);
  zeros.push_back(cutoff);
  // |J0|^p behaves like |r - z|^p at a zero; grade each panel towards both
  // ends so non-integer p keeps full accuracy.
  static constexpr double kGrading[] = {1e-6, 1e-4, 1e-2, 0.1, 0.5, 0.9, 0.99, 0.9999, 0.999999};
  std::vector<double> edges{0.0};
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    const double w = zeros[i + 1] - zeros[i];
    for (double g : kGrading) edges.push_back(zeros[i] + g * w);
    edges.push_back(zeros[i + 1]);
  }
  const double inv_s2 = 1.0 / (scale * scale);
  auto g = [&](double r) {
    return kTwoPi * r * std::pow(std::abs(bessel_j0(kTwoPi * r)), p) * std::exp(-p * kPi * r * r * inv_s2);
  };
  CompensatedSum total;
  for (double v : integrate_panels(g, edges, 24)) total.add(v);
  return total.value();
}

TestFunction TestFunction::gaussian(double scale, int dim) {
  require(scale > 0.0 && std::isfinite(scale), "Gaussian scale must be positive");
  require(dim >= 1, "Gaussian dimension must be >= 1");
  return TestFunction(GaussianParams{scale, dim}, 1.0);
}

TestFunction TestFunction::knapp_tube(double width, double center_angle) {
  require(width > 0.0 && width <= 0.25, "Knapp tube width must lie in (0, 1/4]");
  require(center_angle >= 0.0 && center_angle < 1.0, "Knapp tube center angle must lie in [0, 1)");
  return TestFunction(KnappParams{width, center_angle}, 1.0);
}

TestFunction TestFunction::annular_bump(double scale) {
  require(scale > 0.0 && std::isfinite(scale), "annular bump scale must be positive");
  return TestFunction(AnnularParams{scale}, 1.0);
}

TestFunction TestFunction::tensor(std::vector<TestFunction> factors) {
  require(!factors.empty(), "tensor product needs at least one factor");
  return TestFunction(Tensor{std::move(factors)}, 1.0);
}

TestFunction TestFunction::parse(std::string_view spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == '*') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  std::vector<TestFunction> factors;
  for (const std::string& part : parts) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : part) {
      if (c == ':') {
        fields.push_back(field);
        field.clear();
      } else {
        field.push_back(c);
      }
    }
    fields.push_back(field);
    const std::string& name = fields[0];
    auto num = [&](std::size_t i, double fallback) {
      if (i >= fields.size()) return fallback;
      return Scalar::parse(fields[i]).value;
    };
    if (name == "gaussian") {
      require(fields.size() >= 2 && fields.size() <= 3, "gaussian expects gaussian:s[:d]");
      factors.push_back(gaussian(num(1, 1.0), static_cast<int>(num(2, 2.0))));
    } else if (name == "knapp") {
      require(fields.size() >= 2 && fields.size() <= 3, "knapp expects knapp:delta[:k0]");
      factors.push_back(knapp_tube(num(1, 0.25), num(2, 0.0)));
    } else if (name == "annular") {
      require(fields.size() == 2, "annular expects annular:s");
      factors.push_back(annular_bump(num(1, 1.0)));
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown test function family '" + name + "'");
    }
  }
  if (factors.size() == 1) return factors.front();
  return tensor(std::move(factors));
}

TestFunction TestFunction::scaled(double c) const {
  require(c > 0.0 && std::isfinite(c), "amplitude must be positive");
  TestFunction out = *this;
  out.amplitude_ *= c;
  return out;
}

FamilyKind TestFunction::kind() const {
  return std::visit(Overloaded{
                        [](const GaussianParams&) { return FamilyKind::kGaussian; },
                        [](const KnappParams&) { return FamilyKind::kKnappTube; },
                        [](const AnnularParams&) { return FamilyKind::kAnnularBump; },
                        [](const Tensor&) { return FamilyKind::kTensor; },
                    },
                    data_);
}

int TestFunction::dim() const {
  return std::visit(Overloaded{
                        [](const GaussianParams& g) { return g.dim; },
                        [](const KnappParams&) { return 2; },
                        [](const AnnularParams&) { return 2; },
                        [](const Tensor& t) {
                          int d = 0;
                          for (const auto& f : t.factors) d += f.dim();
                          return d;
                        },
                    },
                    data_);
}

std::string TestFunction::describe() const {
  std::string body = std::visit(
      Overloaded{
          [](const GaussianParams& g) {
            return "gaussian(s=" + fmt_num(g.scale) + ",d=" + std::to_string(g.dim) + ")";
          },
          [](const KnappParams& k) {
            return "knapp(delta=" + fmt_num(k.width) + ",k0=" + fmt_num(k.center) + ")";
          },
          [](const AnnularParams& a) { return "annular(s=" + fmt_num(a.scale) + ")"; },
          [](const Tensor& t) {
            std::string s;
            for (std::size_t i = 0; i < t.factors.size(); ++i) {
              if (i) s += "*";
              s += t.factors[i].describe();
            }
            return s;
          },
      },
      data_);
  if (amplitude_ != 1.0) body = fmt_num(amplitude_) + "*" + body;
  return body;
}

const GaussianParams& TestFunction::gaussian_params() const {
  const auto* g = std::get_if<GaussianParams>(&data_);
  require(g != nullptr, describe() + " is not a Gaussian");
  return *g;
}

const KnappParams& TestFunction::knapp_params() const {
  const auto* k = std::get_if<KnappParams>(&data_);
  require(k != nullptr, describe() + " is not a Knapp tube");
  return *k;
}

const AnnularParams& TestFunction::annular_params() const {
  const auto* a = std::get_if<AnnularParams>(&data_);
  require(a != nullptr, describe() + " is not an annular bump");
  return *a;
}

std::span<const TestFunction> TestFunction::factors() const {
  if (const auto* t = std::get_if<Tensor>(&data_)) return t->factors;
  return {};
}

double TestFunction::knapp_half_tangential() const { return kKnappTangential / knapp_params().width; }

double TestFunction::knapp_half_normal() const {
  const double d = knapp_params().width;
  return kKnappNormal / (d * d);
}

double TestFunction::knapp_area() const { return 4.0 * knapp_half_tangential() * knapp_half_normal(); }

std::complex<double> TestFunction::evaluate(std::span<const double> x) const {
  check_dim(*this, x.size());
  std::complex<double> v = std::visit(
      Overloaded{
          [&](const GaussianParams& g) -> std::complex<double> {
            return std::exp(-kPi * norm2(x) / (g.scale * g.scale));
          },
          [&](const KnappParams& k) -> std::complex<double> {
            const double c = std::cos(kTwoPi * k.center);
            const double s = std::sin(kTwoPi * k.center);
            const double along_normal = x[0] * c + x[1] * s;
            const double along_tangent = -x[0] * s + x[1] * c;
            if (std::abs(along_tangent) > knapp_half_tangential() ||
                std::abs(along_normal) > knapp_half_normal()) {
              return 0.0;
            }
            return std::polar(1.0, kTwoPi * along_normal);
          },
          [&](const AnnularParams& a) -> std::complex<double> {
            const double r2 = norm2(x);
            return bessel_j0(kTwoPi * std::sqrt(r2)) * std::exp(-kPi * r2 / (a.scale * a.scale));
          },
          [&](const Tensor& t) -> std::complex<double> {
            std::complex<double> prod = 1.0;
            std::size_t offset = 0;
            for (const auto& f : t.factors) {
              const auto d = static_cast<std::size_t>(f.dim());
              prod *= f.evaluate(x.subspan(offset, d));
              offset += d;
            }
            return prod;
          },
      },
      data_);
  return amplitude_ * v;
}

std::complex<double> TestFunction::fourier(std::span<const double> xi) const {
  check_dim(*this, xi.size());
  std::complex<double> v = std::visit(
      Overloaded{
          [&](const GaussianParams& g) -> std::complex<double> {
            return std::pow(g.scale, g.dim) * std::exp(-kPi * g.scale * g.scale * norm2(xi));
          },
          [&](const KnappParams& k) -> std::complex<double> {
            const double c = std::cos(kTwoPi * k.center);
            const double s = std::sin(kTwoPi * k.center);
            const double e0 = xi[0] - c;
            const double e1 = xi[1] - s;
            const double along_normal = e0 * c + e1 * s;
            const double along_tangent = -e0 * s + e1 * c;
            const double a = knapp_half_tangential();
            const double b = knapp_half_normal();
            return 4.0 * a * b * sinc(kTwoPi * a * along_tangent) * sinc(kTwoPi * b * along_normal);
          },
          [&](const AnnularParams& an) -> std::complex<double> {
            const double rho = std::sqrt(norm2(xi));
            const double s2 = an.scale * an.scale;
            return s2 * std::exp(-kPi * s2 * (rho - 1.0) * (rho - 1.0)) * scaled_bessel_i0(kTwoPi * s2 * rho);
          },
          [&](const Tensor& t) -> std::complex<double> {
            std::complex<double> prod = 1.0;
            std::size_t offset = 0;
            for (const auto& f : t.factors) {
              const auto d = static_cast<std::size_t>(f.dim());
              prod *= f.fourier(xi.subspan(offset, d));
              offset += d;
            }
            return prod;
          },
      },
      data_);
  return amplitude_ * v;
}

double TestFunction::lp_norm(double p) const {
  require(p >= 1.0 && std::isfinite(p), "L^p norm needs finite p >= 1");
  double v = std::visit(Overloaded{
                            [&](const GaussianParams& g) {
                              // (s^2/p)^{d/2} = int exp(-p pi |x|^2/s^2) dx.
                              return std::pow(g.scale, g.dim / p) * std::pow(p, -g.dim / (2.0 * p));
                            },
                            [&](const KnappParams&) { return std::pow(knapp_area(), 1.0 / p); },
                            [&](const AnnularParams& a) {
                              return std::pow(annular_bump_lp_power(a.scale, p), 1.0 / p);
                            },
                            [&](const Tensor& t) {
                              double prod = 1.0;
                              for (const auto& f : t.factors) prod *= f.lp_norm(p);
                              return prod;
                            },
                        },
                        data_);
  return amplitude_ * v;
}

std::complex<double> evaluate(const TestFunction& f, std::span<const double> x) { return f.evaluate(x); }

std::complex<double> fourier_closed_form(const TestFunction& f, std::span<const double> xi) {
  return f.fourier(xi);
}

double lp_norm_closed_form(const TestFunction& f, double p) { return f.lp_norm(p); }

}  // namespace rlab
