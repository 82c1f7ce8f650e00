#include "restriction_lab/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "restriction_lab/error.hpp"

namespace rlab {
namespace {

using Wide = __int128;

Rational reduce(Wide num, Wide den) {
  require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) {
    fail(ErrorCode::kInvalidArgument, "rational arithmetic overflow");
  }
  return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Decimal literal -> exact rational when it fits in 64 bits.
std::optional<Rational> parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  Wide mantissa = 0;
  int frac_digits = 0;
  int digits = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (++digits > 30) return std::nullopt;
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++frac_digits;
    } else {
      break;
    }
  }
  if (digits == 0) return std::nullopt;
  int exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return std::nullopt;
    std::int64_t e = 0;
    if (!parse_int(std::string_view(s).substr(i + 1), e) || e > 30 || e < -30) {
      return std::nullopt;
    }
    exponent = static_cast<int>(e);
  }
  int shift = exponent - frac_digits;
  Wide num = negative ? -mantissa : mantissa;
  Wide den = 1;
  for (int k = 0; k < std::abs(shift); ++k) {
    if (shift > 0) {
      num *= 10;
    } else {
      den *= 10;
    }
  }
  try {
    return reduce(num, den);
  } catch (const Error&) {
    return std::nullopt;
  }
}

double parse_double_strict(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    fail(ErrorCode::kInvalidArgument, "cannot parse number '" + s + "'");
  }
  return v;
}

[[noreturn]] void reject_index(double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "Lebesgue index must be ≥ 1 (got %.15g)", v);
  fail(ErrorCode::kInvalidArgument, buf);
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) { return reduce(num, den); }

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.den + Wide(b.num) * a.den, Wide(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.den - Wide(b.num) * a.den, Wide(a.den) * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.num, Wide(a.den) * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.den, Wide(a.den) * b.num);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num) * b.den;
  Wide rhs = Wide(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s = trim(text);
  require(!s.empty(), "empty number");
  if (auto caret = s.find('^'); caret != std::string::npos) {
    std::int64_t base = 0;
    std::int64_t power = 0;
    if (!parse_int(std::string_view(s).substr(0, caret), base) ||
        !parse_int(std::string_view(s).substr(caret + 1), power) || base == 0 ||
        power > 62 || power < -62) {
      fail(ErrorCode::kInvalidArgument, "cannot parse power '" + s + "'");
    }
    Rational r{1, 1};
    Rational b = Rational::make(base, 1);
    for (std::int64_t k = 0; k < std::abs(power); ++k) {
      r = power > 0 ? r * b : r / b;
    }
    return from_rational(r);
  }
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Scalar num = parse(std::string_view(s).substr(0, slash));
    Scalar den = parse(std::string_view(s).substr(slash + 1));
    require(den.value != 0.0, "division by zero in '" + s + "'");
    if (num.exact && den.exact) return from_rational(*num.exact / *den.exact);
    return from_double(num.value / den.value);
  }
  double v = parse_double_strict(s);
  return Scalar{v, parse_decimal(s)};
}

LebesgueIndex LebesgueIndex::from_double(double value) {
  if (std::isinf(value) && value > 0) return infinity();
  if (!(value >= 1.0)) {
    reject_index(value);
  }
  LebesgueIndex idx;
  idx.value_ = value;
  return idx;
}

LebesgueIndex LebesgueIndex::from_rational(std::int64_t num, std::int64_t den) {
  Rational r = Rational::make(num, den);
  if (r < Rational{1, 1}) {
    reject_index(r.to_double());
  }
  LebesgueIndex idx;
  idx.value_ = r.to_double();
  idx.rational_ = r;
  return idx;
}

LebesgueIndex LebesgueIndex::from_scalar(const Scalar& s) {
  if (s.exact) return from_rational(s.exact->num, s.exact->den);
  return from_double(s.value);
}

LebesgueIndex LebesgueIndex::infinity() {
  LebesgueIndex idx;
  idx.infinite_ = true;
  idx.value_ = std::numeric_limits<double>::infinity();
  return idx;
}

LebesgueIndex LebesgueIndex::parse(std::string_view text) {
  std::string s = trim(text);
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity") return infinity();
  return from_scalar(Scalar::parse(s));
}

double LebesgueIndex::value() const { return value_; }

std::string LebesgueIndex::str() const {
  if (infinite_) return "inf";
  if (rational_) return rational_->str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value_);
  return buf;
}

LebesgueIndex conjugate(const LebesgueIndex& p) {
  if (p.is_infinite()) return LebesgueIndex::from_rational(1, 1);
  if (const auto& r = p.rational()) {
    if (r->num == r->den) return LebesgueIndex::infinity();
    Rational c = *r / (*r - Rational{1, 1});
    return LebesgueIndex::from_rational(c.num, c.den);
  }
  return LebesgueIndex::from_double(conjugate(p.value()));
}

double conjugate(double p) {
  if (!(p >= 1.0)) {
    reject_index(p);
  }
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

ExponentPair::ExponentPair(LebesgueIndex p, LebesgueIndex q) : p_(std::move(p)), q_(std::move(q)) {
  require(!p_.is_infinite() && !q_.is_infinite(), "exponent pair requires finite p and q");
}

ExponentPair::ExponentPair(double p, double q)
    : ExponentPair(LebesgueIndex::from_double(p), LebesgueIndex::from_double(q)) {}

bool torus_admissible(const ExponentPair& pair) {
  const LebesgueIndex& p = pair.p();
  const LebesgueIndex& q = pair.q();
  if (p.rational() && q.rational()) {
    const Rational& pr = *p.rational();
    const Rational& qr = *q.rational();
    if (!(pr < Rational{4, 3})) return false;
    if (pr == Rational{1, 1}) return true;
    Rational bound = pr / (Rational{3, 1} * (pr - Rational{1, 1}));
    return qr <= bound;
  }
  double pv = p.value();
  if (!(pv < 4.0 / 3.0 - kRegionTolerance)) return false;
  if (pv == 1.0) return true;
  double bound = conjugate(pv) / 3.0;
  return q.value() <= bound * (1.0 + kRegionTolerance);
}

bool sphere_conjecture_region(int ambient_dim, const ExponentPair& pair) {
  require(ambient_dim >= 2, "sphere region needs ambient dimension >= 2");
  const std::int64_t n = ambient_dim;
  const LebesgueIndex& p = pair.p();
  const LebesgueIndex& q = pair.q();
  if (p.rational() && q.rational()) {
    const Rational& pr = *p.rational();
    if (!(pr < Rational::make(2 * n, n + 1))) return false;
    if (pr == Rational{1, 1}) return true;
    Rational bound = pr / (pr - Rational{1, 1}) * Rational::make(n - 1, n + 1);
    return *q.rational() <= bound;
  }
  double pv = p.value();
  double nd = static_cast<double>(n);
  if (!(pv < 2.0 * nd / (nd + 1.0) - kRegionTolerance)) return false;
  if (pv == 1.0) return true;
  double bound = conjugate(pv) * (nd - 1.0) / (nd + 1.0);
  return q.value() <= bound * (1.0 + kRegionTolerance);
}

bool dual_extension_region(const LebesgueIndex& p_prime, const LebesgueIndex& q_prime) {
  if (p_prime.is_infinite()) return true;
  if (q_prime.is_infinite()) {
    // q' = inf satisfies the q' constraint; only p' > 4 remains.
    if (const auto& r = p_prime.rational()) return *r > Rational{4, 1};
    return p_prime.value() > 4.0 * (1.0 + kRegionTolerance);
  }
  if (p_prime.rational() && q_prime.rational()) {
    const Rational& pr = *p_prime.rational();
    if (!(pr > Rational{4, 1})) return false;
    Rational third = pr / Rational{3, 1};
    Rational bound = third / (third - Rational{1, 1});
    return *q_prime.rational() >= bound;
  }
  double pv = p_prime.value();
  if (!(pv > 4.0 * (1.0 + kRegionTolerance))) return false;
  double bound = conjugate(pv / 3.0);
  return q_prime.value() >= bound * (1.0 - kRegionTolerance);
}

double knapp_growth_exponent(const ExponentPair& pair, int factors) {
  LebesgueIndex pc = pair.p_conjugate();
  double three_over_pc = pc.is_infinite() ? 0.0 : 3.0 / pc.value();
  return factors * (three_over_pc - 1.0 / pair.q().value());
}

double dilation_growth_exponent(const LebesgueIndex& p, int factors) {
  return factors * (1.5 - 2.0 / p.value());
}

double boundary_distance(double p, double q) {
  // Segment p = 4/3, 1 <= q <= 4/3.
  const double dq = q - std::clamp(q, 1.0, 4.0 / 3.0);
  double best = std::hypot(p - 4.0 / 3.0, dq);
  // Curve q = t / (3 (t - 1)) for 1 < t <= 4/3; scan log-spaced t - 1, then
  // golden-section refine.
  auto dist2 = [&](double u) {
    double t = 1.0 + u;
    double c = t / (3.0 * u);
    return (t - p) * (t - p) + (c - q) * (c - q);
  };
  constexpr int kSamples = 4000;
  const double lo = std::log(1e-6);
  const double hi = std::log(1.0 / 3.0);
  int best_i = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    double d = dist2(std::exp(lo + (hi - lo) * i / kSamples));
    if (d < best_d) {
      best_d = d;
      best_i = i;
    }
  }
  double a = lo + (hi - lo) * std::max(best_i - 1, 0) / kSamples;
  double b = lo + (hi - lo) * std::min(best_i + 1, kSamples) / kSamples;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    if (dist2(std::exp(c)) < dist2(std::exp(d))) {
      b = d;
    } else {
      a = c;
    }
  }
  best_d = std::min(best_d, dist2(std::exp(0.5 * (a + b))));
  return std::min(best, std::sqrt(best_d));
}

std::vector<LebesgueIndex> index_range(const LebesgueIndex& lo, const LebesgueIndex& hi,
                                       const Scalar& step) {
  require(!lo.is_infinite() && !hi.is_infinite(), "index range bounds must be finite");
  require(step.value > 0.0, "index range step must be positive");
  require(lo.value() <= hi.value(), "index range requires lo <= hi");
  std::vector<LebesgueIndex> out;
  if (lo.rational() && hi.rational() && step.exact) {
    for (Rational x = *lo.rational(); x <= *hi.rational(); x = x + *step.exact) {
      out.push_back(LebesgueIndex::from_rational(x.num, x.den));
    }
    return out;
  }
  const double span = hi.value() - lo.value();
  const auto count = static_cast<std::int64_t>(std::floor(span / step.value + 1e-9));
  require(count < 1000000, "index range too long");
  for (std::int64_t k = 0; k <= count; ++k) {
    out.push_back(LebesgueIndex::from_double(lo.value() + static_cast<double>(k) * step.value));
  }
  return out;
}

}  // namespace rlab
