#pragma once

// Brute-force reconstruction of the generalized Weierstrass semigroup from
// valuation vectors of monomials z^a y^b prod (x - alpha_l)^{c_l} and lub
// closure. Uses only the divisor tables of the curve, never the closed-form
// maximal elements, so it can check them.
//
// For a target simplex {alpha in N_0^{m+1} : sum(alpha) <= S} the box
// [-S, S]^{m+1} is enough: every witness gamma <= alpha of a member alpha
// has sum(gamma) >= 0, hence gamma_t >= -sum_{s != t} alpha_s >= -S.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wsg/curve.hpp"
#include "wsg/gaps.hpp"
#include "wsg/membership.hpp"
#include "wsg/point_vector.hpp"

namespace wsg {

struct Box {
  PointVector lower;
  PointVector upper;

  bool contains(const PointVector& v) const;
};

void check_box(const Box& box);
// [-bound, bound]^dim
Box symmetric_box(std::size_t dim, std::int64_t bound);

// Valuation vectors of all regular monomials that land in the box. Exponent
// ranges come from the box: the degree of a regular monomial vector is at
// least a_z (q^3 - q) / p^b, which caps a_z; regularity and the degree cap
// b_y (when m < q/p^b; otherwise y^{q+1} / prod(x - alpha_l) has trivial
// vector and b_y is taken mod q+1); each c_l is then pinned by coordinate l.
// range_slack widens every range, for saturation tests. Sorted.
std::vector<PointVector> monomial_vectors_in_box(const DerivedConstants& dc, std::int64_t m, const Box& box,
                                                 std::int64_t range_slack = 0);

// Least superset of `points` closed under pairwise lub. Every point must lie
// in the box; lubs of points in a box stay in it. Sorted.
std::vector<PointVector> lub_closure(std::span<const PointVector> points, const Box& box);

// Named verdicts:
//   closure_matches_membership  closure of monomial vectors, restricted to
//                               the nonnegative simplex, equals the membership
//                               test on that simplex
//   formula_elements_in_closure absolute maximal family vectors in the box and
//                               classical relative maximals in the simplex all
//                               appear in the closure
//   monomials_are_members       every monomial vector passes membership
//   region_size                 |absolute maximals in region| = e
//   gaps_route_agreement, pure_gaps_route_agreement
//   relative_maximal_count      closed-form count = enumerated count
//   gap_count_bound
//   two_point_count             (m = 1 only)
// `families` only affects the membership test; the mutation harness uses it.
std::map<std::string, bool> consistency_report(const DerivedConstants& dc, std::int64_t m, std::int64_t sum_bound,
                                               FamilySelection families = {}, ScanOptions options = {});

bool all_passed(const std::map<std::string, bool>& checks);

}  // namespace wsg
