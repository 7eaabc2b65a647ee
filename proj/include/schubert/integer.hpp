#pragma once

#include <cstdint>

#include "schubert/error.hpp"

namespace schubert {

/// Exact coefficient type. Every arithmetic step on coefficients goes through
/// the checked helpers below, so an overflow raises instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Int binomial(int n, int k);

}  // namespace schubert
