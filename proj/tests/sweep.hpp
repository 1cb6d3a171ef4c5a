#pragma once

// Parameter sweep shared by the unit and acceptance suites:
//   X: p in {2, 3}, a in {1, 2}, b | a, n in {3, 5}
//   Y: q in {2, 3, 4}, n in {3, 5}
// with every s dividing (q^n + 1) / (q + 1) that gives positive genus and
// M <= 500.

#include <cstdint>
#include <vector>

#include "wsg/curve.hpp"
#include "wsg/error.hpp"

namespace wsg::testing {

inline std::vector<std::int64_t> divisors(std::int64_t x) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= x; ++d)
    if (x % d == 0) out.push_back(d);
  return out;
}

inline void add_if_valid(std::vector<DerivedConstants>& out, const RawParams& raw) {
  try {
    auto dc = make_curve(raw);
    if (dc.M <= 500) out.push_back(dc);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GenusNotPositive) throw;
  }
}

inline std::vector<DerivedConstants> sweep() {
  std::vector<DerivedConstants> out;
  for (std::int64_t p : {2, 3})
    for (std::int64_t a : {1, 2})
      for (std::int64_t b = 1; b <= a; ++b) {
        if (a % b != 0) continue;
        for (std::int64_t n : {3, 5}) {
          std::int64_t q = 1;
          for (std::int64_t k = 0; k < a; ++k) q *= p;
          std::int64_t qn = 1;
          for (std::int64_t k = 0; k < n; ++k) qn *= q;
          for (auto s : divisors((qn + 1) / (q + 1)))
            add_if_valid(out, RawParams{Family::X, p, a, b, 0, n, s});
        }
      }
  for (std::int64_t q : {2, 3, 4})
    for (std::int64_t n : {3, 5}) {
      std::int64_t qn = 1;
      for (std::int64_t k = 0; k < n; ++k) qn *= q;
      for (auto s : divisors((qn + 1) / (q + 1))) add_if_valid(out, RawParams{Family::Y, 0, 0, 0, q, n, s});
    }
  return out;
}

inline std::vector<DerivedConstants> sweep_with_genus_at_most(std::int64_t g) {
  std::vector<DerivedConstants> out;
  for (auto& dc : sweep())
    if (dc.genus <= g) out.push_back(dc);
  return out;
}

}  // namespace wsg::testing
