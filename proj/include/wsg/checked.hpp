#pragma once

// Overflow-checked 64-bit integer arithmetic. Every operation either returns
// the exact result or throws Error(ErrorCode::Overflow).

#include <cstdint>

#include "wsg/error.hpp"

namespace wsg::checked {

using i64 = std::int64_t;

[[noreturn]] void overflow(const char* op);

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

inline i64 pow(i64 base, unsigned exp) {
  i64 r = 1;
  while (exp-- > 0) r = mul(r, base);
  return r;
}

// Division rounding toward negative infinity. d must be positive.
inline i64 floor_div(i64 n, i64 d) {
  i64 q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

inline i64 ceil_div(i64 n, i64 d) {
  i64 q = n / d;
  if ((n % d != 0) && (n > 0)) ++q;
  return q;
}

// Least nonnegative residue. d must be positive.
inline i64 mod(i64 n, i64 d) {
  i64 r = n % d;
  return r < 0 ? r + d : r;
}

// Binomial coefficient C(n, k) computed exactly; throws on overflow.
i64 binomial(i64 n, i64 k);

}  // namespace wsg::checked
