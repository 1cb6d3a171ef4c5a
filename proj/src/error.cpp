#include "wsg/error.hpp"

#include <numeric>

#include "wsg/checked.hpp"

namespace wsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::BNotDividingA: return "BNotDividingA";
    case ErrorCode::SNotDividing: return "SNotDividing";
    case ErrorCode::NEven: return "NEven";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::GenusNotPositive: return "GenusNotPositive";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::BadIndexPair: return "BadIndexPair";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::BadBox: return "BadBox";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace checked {

void overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("integer overflow in ") + op);
}

i64 binomial(i64 n, i64 k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i64 r = 1;
  for (i64 i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; reduce by gcd first so
    // that intermediate products stay as small as possible.
    i64 num = n - k + i;
    i64 den = i;
    i64 g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;  // den now divides num
    r = mul(r, num);
  }
  return r;
}

}  // namespace checked
}  // namespace wsg
