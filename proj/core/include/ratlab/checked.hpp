#pragma once

#include <cstdint>
#include <string>

#include "ratlab/error.hpp"

namespace ratlab {

using Int = std::int64_t;

// Overflow-checked arithmetic. Every operation either returns the exact value
// or throws Error{kOverflow}; nothing wraps around.

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline Int pow2(int k) {
  if (k < 0 || k > 62) {
    throw Error(ErrorCode::kOverflow, "2^" + std::to_string(k) + " does not fit in 64 bits");
  }
  return Int{1} << k;
}

inline Int pow3(int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  Int out = 1;
  for (int i = 0; i < k; ++i) out = checked_mul(out, 3);
  return out;
}

// Floor division for any sign of numerator; denominator must be positive.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Non-negative remainder, 0 <= result < b for b > 0.
inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

inline Int ceil_half(Int a) { return floor_div(a + 1, 2); }

}  // namespace ratlab
