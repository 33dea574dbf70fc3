#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace auctionsim {

// Comparison tolerance shared by payment constraints, threshold searches and
// the certification oracle. All <=/>= checks on money quantities go through
// these helpers so mechanisms and their verifiers agree on boundary cases.
inline constexpr double kTol = 1e-9;

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();
inline constexpr double kUnboundedAllowance = std::numeric_limits<double>::infinity();

inline bool approx_leq(double a, double b, double tol = kTol) { return a <= b + tol; }
inline bool approx_geq(double a, double b, double tol = kTol) { return a + tol >= b; }
inline bool approx_lt(double a, double b, double tol = kTol) { return a < b - tol; }
inline bool approx_gt(double a, double b, double tol = kTol) { return a > b + tol; }
inline bool approx_eq(double a, double b, double tol = kTol) { return std::fabs(a - b) <= tol; }

// Integer exponents of (1+eps). Sentinels stand in for -inf/+inf so that
// ordinary integer comparisons order them correctly against finite values.
using Exponent = long long;
inline constexpr Exponent kExponentNegInf = std::numeric_limits<Exponent>::min();
inline constexpr Exponent kExponentPosInf = std::numeric_limits<Exponent>::max();

inline double power_of(double one_plus_eps, Exponent z) {
  return std::pow(one_plus_eps, static_cast<double>(z));
}

// Largest integer z with (1+eps)^z <= x + tol. The floating-point logarithm
// is post-corrected by nudging z until the bracket holds under the tolerance.
// Requires x + tol > 0.
inline Exponent floor_exponent(double x, double one_plus_eps, double tol = kTol) {
  Exponent z = static_cast<Exponent>(std::floor(std::log(x) / std::log(one_plus_eps)));
  while (power_of(one_plus_eps, z) > x + tol) --z;
  while (power_of(one_plus_eps, z + 1) <= x + tol) ++z;
  return z;
}

}  // namespace auctionsim
