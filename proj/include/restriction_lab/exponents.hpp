#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rlab {

// Exact rational with positive denominator, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

// A real number that remembers whether it was supplied exactly. Decimal
// literals ("1.05") and fractions ("4/3") parse exactly; everything computed
// in floating point does not.
struct Scalar {
  double value = 0.0;
  std::optional<Rational> exact;

  static Scalar from_double(double v) { return {v, std::nullopt}; }
  static Scalar from_rational(Rational r) { return {r.to_double(), r}; }
  // Accepts "a/b", decimal literals with optional exponent, and "2^k".
  static Scalar parse(std::string_view text);
};

// Lebesgue exponent in [1, inf]. Infinity only arises as a conjugate (or is
// parsed from "inf"); ExponentPair rejects it for p and q.
class LebesgueIndex {
 public:
  static LebesgueIndex from_double(double value);
  static LebesgueIndex from_rational(std::int64_t num, std::int64_t den);
  static LebesgueIndex from_scalar(const Scalar& s);
  static LebesgueIndex infinity();
  static LebesgueIndex parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_exact() const { return infinite_ || rational_.has_value(); }
  const std::optional<Rational>& rational() const { return rational_; }
  // +inf for the infinite index.
  double value() const;
  std::string str() const;

 private:
  LebesgueIndex() = default;
  double value_ = 1.0;
  std::optional<Rational> rational_;
  bool infinite_ = false;
};

LebesgueIndex conjugate(const LebesgueIndex& p);
// Floating conjugate; returns +inf for p == 1.
double conjugate(double p);

class ExponentPair {
 public:
  ExponentPair(LebesgueIndex p, LebesgueIndex q);
  ExponentPair(double p, double q);

  const LebesgueIndex& p() const { return p_; }
  const LebesgueIndex& q() const { return q_; }
  LebesgueIndex p_conjugate() const { return conjugate(p_); }

 private:
  LebesgueIndex p_;
  LebesgueIndex q_;
};

// Float comparisons in the region predicates use this tolerance; exact inputs
// are compared exactly.
inline constexpr double kRegionTolerance = 1e-12;

// 1 <= p < 4/3 and q <= p'/3 (q unrestricted when p = 1).
bool torus_admissible(const ExponentPair& pair);

// The cited sphere region in R^n: p < 2n/(n+1), q <= p'(n-1)/(n+1).
bool sphere_conjecture_region(int ambient_dim, const ExponentPair& pair);

// p' > 4 and q' >= (p'/3)'.
bool dual_extension_region(const LebesgueIndex& p_prime, const LebesgueIndex& q_prime);

// Predicted power-law exponents of the restriction ratio along the two probe
// families, for a `factors`-fold tensor on T^factors. Positive means blow-up.
double knapp_growth_exponent(const ExponentPair& pair, int factors);
double dilation_growth_exponent(const LebesgueIndex& p, int factors);

// Euclidean distance from (p, q) to the edge of the admissible region: the
// curve q = p'/3 for 1 < p <= 4/3 and the segment p = 4/3, 1 <= q <= 4/3.
double boundary_distance(double p, double q);

// lo, lo + step, ... up to hi inclusive. Exact when all three are exact.
std::vector<LebesgueIndex> index_range(const LebesgueIndex& lo, const LebesgueIndex& hi,
                                       const Scalar& step);

}  // namespace rlab
