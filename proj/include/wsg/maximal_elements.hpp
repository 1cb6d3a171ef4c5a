#pragma once

// Closed-form maximal elements of the generalized Weierstrass semigroup at
// (P_inf, P_1, ..., P_m).
//
// Index pairs (i, j) range over [0, q] x [1, M] minus (q, M); the map
// (i, j) -> iM + j is a bijection onto [1, e - 1]. With S = sum of the shifts
// k_1..k_m and top = q^2 e / p^b:
//
//   absolute (i,j,k):  (top - (m + S) e - i y_pole - j z_pole,  k_l e + iM + j)
//   translation (k):   (-S e,                                    k_l e)
//   relative (i,j,k):  (top - (1 + S) e - i y_pole - j z_pole,  k_l e + iM + j)
//   relative zero (k): ((m - 1 - S) e,                           k_l e)
//
// The absolute maximal set is the union of the absolute and translation
// families; the relative maximal set is the union of the relative and
// relative-zero families. Elements with all shifts zero lie in the
// fundamental region 0 <= coords[l] < e, l >= 1.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wsg/curve.hpp"
#include "wsg/point_vector.hpp"

namespace wsg {

struct IndexPair {
  std::int64_t i = 0;
  std::int64_t j = 1;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

void check_index_pair(const DerivedConstants& dc, IndexPair ip);
// All index pairs in lexicographic order.
std::vector<IndexPair> index_pairs(const DerivedConstants& dc);
// iM + j
std::int64_t residue_of(const DerivedConstants& dc, IndexPair ip);
// Inverse of residue_of for rho in [1, e - 1].
IndexPair index_pair_of(const DerivedConstants& dc, std::int64_t rho);

struct MaximalElement {
  enum class Kind { Absolute, Translation, Relative, RelativeZero };

  Kind kind = Kind::Translation;
  IndexPair pair;  // ignored for Translation and RelativeZero
  std::vector<std::int64_t> shifts;  // k_2, ..., k_{m+1}

  static MaximalElement absolute(IndexPair ip, std::vector<std::int64_t> ks) {
    return {Kind::Absolute, ip, std::move(ks)};
  }
  static MaximalElement translation(std::vector<std::int64_t> ks) { return {Kind::Translation, {}, std::move(ks)}; }
  static MaximalElement relative(IndexPair ip, std::vector<std::int64_t> ks) {
    return {Kind::Relative, ip, std::move(ks)};
  }
  static MaximalElement relative_zero(std::vector<std::int64_t> ks) { return {Kind::RelativeZero, {}, std::move(ks)}; }

  friend bool operator==(const MaximalElement&, const MaximalElement&) = default;
};

std::string to_string(MaximalElement::Kind kind);

PointVector realize(const DerivedConstants& dc, std::int64_t m, const MaximalElement& element);

// The absolute maximal element of the fundamental region for (i, j).
PointVector region_generator(const DerivedConstants& dc, std::int64_t m, IndexPair ip);

// Absolute maximal elements in the fundamental region: the e - 1 region
// generators plus the zero vector. Sorted.
std::vector<PointVector> absolute_maximals_in_region(const DerivedConstants& dc, std::int64_t m);
// Relative maximal elements in the fundamental region. Sorted.
std::vector<PointVector> relative_maximals_in_region(const DerivedConstants& dc, std::int64_t m);

// Largest shift sum S for which the relative element (i, j, k) has a
// nonnegative first coordinate; negative when no such S >= 0 exists.
std::int64_t shift_bound(const DerivedConstants& dc, IndexPair ip);

// Minimal generating set of the classical Weierstrass semigroup: absolute
// maximal elements with all coordinates nonnegative. Sorted.
std::vector<PointVector> minimal_generating_set(const DerivedConstants& dc, std::int64_t m);
// Relative maximal elements with all coordinates nonnegative. Sorted.
std::vector<PointVector> classical_relative_maximals(const DerivedConstants& dc, std::int64_t m);
// Closed-form cardinality of classical_relative_maximals.
std::int64_t count_classical_relative_maximals(const DerivedConstants& dc, std::int64_t m);

// Calls fn for every k in N_0^parts with sum(k) <= max_sum, in
// lexicographic order. Nothing is called when max_sum < 0.
void for_each_bounded_composition(std::int64_t parts, std::int64_t max_sum,
                                  const std::function<void(std::span<const std::int64_t>)>& fn);

}  // namespace wsg
