#pragma once

// Gaps and pure gaps of H(P_inf, P_1, ..., P_m), computed by two independent
// routes: from the classical relative maximal elements, and as the
// complement of the membership test on the simplex sum(alpha) <= 2g - 1.
// Every divisor of degree >= 2g is nonspecial, so no gap lies outside it.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsg/curve.hpp"
#include "wsg/membership.hpp"
#include "wsg/point_vector.hpp"

namespace wsg {

struct ScanOptions {
  // Worker threads for simplex scans. Output does not depend on it.
  unsigned jobs = 1;
  // Degree bound of the scanned simplex; defaults to 2g - 1. Values below
  // the default are rejected.
  std::optional<std::int64_t> degree_bound;
};

// Calls fn(alpha) for every alpha in N_0^dim with sum(alpha) <= bound, in
// lexicographic order. The same PointVector is reused between calls.
void for_each_in_simplex(std::size_t dim, std::int64_t bound, const std::function<void(const PointVector&)>& fn);

// Largest degree a gap can have: 2g - 1.
std::int64_t gap_degree_bound(const DerivedConstants& dc);

std::vector<PointVector> gaps_via_relative_maximals(const DerivedConstants& dc, std::int64_t m);
std::vector<PointVector> gaps_via_complement(const DerivedConstants& dc, std::int64_t m, ScanOptions options = {});
std::int64_t count_gaps_via_complement(const DerivedConstants& dc, std::int64_t m, ScanOptions options = {});

std::vector<PointVector> pure_gaps_via_relative_maximals(const DerivedConstants& dc, std::int64_t m);
// Vectors of the simplex for which no coordinate has a witness.
std::vector<PointVector> pure_gaps_via_witnesses(const DerivedConstants& dc, std::int64_t m, ScanOptions options = {});

// For a list of pairs sorted by strictly increasing second coordinate, the
// number of entries before position t whose first coordinate is larger than
// that of entry t. Position 0 always gives 0.
std::int64_t inversion_count_at(std::span<const PointVector> sorted, std::size_t t);

// Exact number of gaps at (P_inf, P_1) from the classical relative maximal
// elements, sum over the list sorted by second coordinate of
// beta_1 + beta_2 - inversion_count_at(t).
std::int64_t count_two_point_gaps(const DerivedConstants& dc);

// Sum over relative maximal beta of sum_r prod_{s != r} beta_s.
std::int64_t gap_count_upper_bound(const DerivedConstants& dc, std::int64_t m);

struct GapReport {
  std::vector<PointVector> gaps;
  std::vector<PointVector> pure_gaps;
  std::int64_t gap_count = 0;
  std::int64_t pure_gap_count = 0;
  std::map<std::string, bool> cross_checks;
};

GapReport gap_report(const DerivedConstants& dc, std::int64_t m, ScanOptions options = {});

}  // namespace wsg
