#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weyld {

using Int = std::int64_t;

namespace detail {

inline Int factorial(int n) {
  Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

inline Int power(Int base, int exponent) {
  Int result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Exact division; a remainder means an upstream invariant is broken.
inline Int exact_div(Int numerator, Int denominator, const char* context) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw std::logic_error(std::string(context) + ": non-integral quotient " +
                           std::to_string(numerator) + "/" + std::to_string(denominator));
  }
  return numerator / denominator;
}

}  // namespace detail
}  // namespace weyld
