#pragma once

#include <cmath>
#include <algorithm>
#include <limits>

namespace ccc::detail {

/// Integer nearest to p * count when the product is within rounding error of
/// it, so a decimal p such as 0.2 or 0.9 behaves like the fraction it names
/// (0.2 * 5 is 1, 0.9 * 1000 is 900) even though its binary value is slightly off.
inline bool near_integer(double product, double& nearest) {
  nearest = std::round(product);
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(product));
  return std::abs(product - nearest) <= tol;
}

/// ceil(p * count) with near-integer products snapped.
inline long long ceil_scaled(double p, long long count) {
  const double product = p * static_cast<double>(count);
  double nearest;
  if (near_integer(product, nearest)) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(product));
}

/// floor(p * count) with near-integer products snapped.
inline long long floor_scaled(double p, long long count) {
  const double product = p * static_cast<double>(count);
  double nearest;
  if (near_integer(product, nearest)) return static_cast<long long>(nearest);
  return static_cast<long long>(std::floor(product));
}

/// Ceiling division for nonnegative numerators and positive denominators.
constexpr long long ceil_div(long long num, long long den) { return (num + den - 1) / den; }

}  // namespace ccc::detail
