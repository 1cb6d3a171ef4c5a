#include "wsg/gaps.hpp"

#include <algorithm>
#include <thread>

#include "wsg/checked.hpp"
#include "wsg/error.hpp"
#include "wsg/maximal_elements.hpp"

namespace wsg {

using checked::i64;

void for_each_in_simplex(std::size_t dim, i64 bound, const std::function<void(const PointVector&)>& fn) {
  if (bound < 0 || dim == 0) return;
  PointVector alpha(dim);
  for (i64 head = 0; head <= bound; ++head) {
    alpha[0] = head;
    for_each_bounded_composition(static_cast<i64>(dim) - 1, bound - head, [&](std::span<const i64> rest) {
      std::copy(rest.begin(), rest.end(), alpha.begin() + 1);
      fn(alpha);
    });
  }
}

i64 gap_degree_bound(const DerivedConstants& dc) { return 2 * dc.genus - 1; }

namespace {

i64 scan_bound(const DerivedConstants& dc, const ScanOptions& options) {
  const i64 minimum = gap_degree_bound(dc);
  if (!options.degree_bound) return minimum;
  if (*options.degree_bound < minimum)
    throw Error(ErrorCode::BadBox, "degree bound below 2g - 1 = " + std::to_string(minimum));
  return *options.degree_bound;
}

// Runs visit(head, alpha) over the simplex, splitting the first coordinate
// across workers. Each worker owns the slices whose head it visits.
template <typename Slice>
std::vector<Slice> scan_slices(std::size_t dim, i64 bound, unsigned jobs,
                               const std::function<void(Slice&, const PointVector&)>& visit) {
  std::vector<Slice> slices(static_cast<std::size_t>(std::max<i64>(bound + 1, 0)));
  auto worker = [&](unsigned id, unsigned stride) {
    PointVector alpha(dim);
    for (i64 head = id; head <= bound; head += stride) {
      alpha[0] = head;
      auto& slice = slices[static_cast<std::size_t>(head)];
      for_each_bounded_composition(static_cast<i64>(dim) - 1, bound - head, [&](std::span<const i64> rest) {
        std::copy(rest.begin(), rest.end(), alpha.begin() + 1);
        visit(slice, alpha);
      });
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id, jobs);
  }
  return slices;
}

std::vector<PointVector> collect_simplex(const DerivedConstants& dc, i64 m, ScanOptions options,
                                         bool (GeneralizedSemigroup::*keep)(const PointVector&) const, bool negate) {
  const GeneralizedSemigroup hs(dc, m);
  auto slices = scan_slices<std::vector<PointVector>>(
      static_cast<std::size_t>(m + 1), scan_bound(dc, options), options.jobs,
      [&](std::vector<PointVector>& out, const PointVector& alpha) {
        if ((hs.*keep)(alpha) != negate) out.push_back(alpha);
      });
  std::vector<PointVector> out;
  for (auto& s : slices) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;  // already lexicographic
}

// Appends every alpha in N_0^{m+1} with alpha_i = beta_i and alpha_j < beta_j
// for j != i.
void append_open_box(const PointVector& beta, std::size_t i, std::vector<PointVector>& out) {
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (j != i && beta[j] <= 0) return;
  PointVector alpha(beta.size());
  alpha[i] = beta[i];
  while (true) {
    out.push_back(alpha);
    std::size_t pos = beta.size();
    while (pos-- > 0) {
      if (pos == i) continue;
      if (++alpha[pos] < beta[pos]) break;
      alpha[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

std::vector<PointVector> gaps_via_relative_maximals(const DerivedConstants& dc, i64 m) {
  std::vector<PointVector> out;
  for (const auto& beta : classical_relative_maximals(dc, m))
    for (std::size_t i = 0; i < beta.size(); ++i) append_open_box(beta, i, out);
  canonicalize(out);
  return out;
}

std::vector<PointVector> gaps_via_complement(const DerivedConstants& dc, i64 m, ScanOptions options) {
  return collect_simplex(dc, m, options, &GeneralizedSemigroup::contains_classical, true);
}

i64 count_gaps_via_complement(const DerivedConstants& dc, i64 m, ScanOptions options) {
  const GeneralizedSemigroup hs(dc, m);
  auto slices = scan_slices<i64>(static_cast<std::size_t>(m + 1), scan_bound(dc, options), options.jobs,
                                 [&](i64& count, const PointVector& alpha) {
                                   if (!hs.contains_classical(alpha)) ++count;
                                 });
  i64 total = 0;
  for (auto c : slices) total += c;
  return total;
}

std::vector<PointVector> pure_gaps_via_relative_maximals(const DerivedConstants& dc, i64 m) {
  const auto lambda = classical_relative_maximals(dc, m);
  std::vector<PointVector> result;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) {
    std::vector<PointVector> slice;
    for (const auto& beta : lambda) append_open_box(beta, i, slice);
    canonicalize(slice);
    if (i == 0) {
      result = std::move(slice);
    } else {
      std::vector<PointVector> both;
      std::set_intersection(result.begin(), result.end(), slice.begin(), slice.end(), std::back_inserter(both));
      result = std::move(both);
    }
  }
  return result;
}

std::vector<PointVector> pure_gaps_via_witnesses(const DerivedConstants& dc, i64 m, ScanOptions options) {
  return collect_simplex(dc, m, options, &GeneralizedSemigroup::is_pure_gap_candidate, false);
}

namespace {

void check_sorted_pairs(std::span<const PointVector> sorted) {
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t].size() != 2) throw Error(ErrorCode::LengthMismatch, "expected pairs");
    if (t > 0 && !(sorted[t - 1][1] < sorted[t][1]))
      throw Error(ErrorCode::NotSorted, "list is not strictly increasing in the second coordinate");
  }
}

}  // namespace

i64 inversion_count_at(std::span<const PointVector> sorted, std::size_t t) {
  check_sorted_pairs(sorted);
  if (t >= sorted.size()) throw Error(ErrorCode::LengthMismatch, "position out of range");
  i64 count = 0;
  for (std::size_t k = 0; k < t; ++k)
    if (sorted[k][0] > sorted[t][0]) ++count;
  return count;
}

i64 count_two_point_gaps(const DerivedConstants& dc) {
  auto lambda = classical_relative_maximals(dc, 1);
  std::sort(lambda.begin(), lambda.end(), [](const auto& x, const auto& y) { return x[1] < y[1]; });
  check_sorted_pairs(lambda);

  std::vector<i64> firsts;
  for (const auto& b : lambda) firsts.push_back(b[0]);
  std::sort(firsts.begin(), firsts.end());
  if (std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end())
    throw Error(ErrorCode::InvariantViolation, "relative maximal elements share a first coordinate");

  // Fenwick tree over the rank of the first coordinate; counts earlier
  // entries with a larger first coordinate.
  std::vector<i64> tree(firsts.size() + 1, 0);
  i64 total = 0;
  for (std::size_t t = 0; t < lambda.size(); ++t) {
    const auto rank = static_cast<std::size_t>(std::lower_bound(firsts.begin(), firsts.end(), lambda[t][0]) - firsts.begin()) + 1;
    i64 at_most = 0;
    for (std::size_t x = rank; x > 0; x -= x & (~x + 1)) at_most += tree[x];
    const i64 inversions = static_cast<i64>(t) - at_most;
    total = checked::add(total, checked::sub(checked::add(lambda[t][0], lambda[t][1]), inversions));
    for (std::size_t x = rank; x < tree.size(); x += x & (~x + 1)) ++tree[x];
  }
  return total;
}

i64 gap_count_upper_bound(const DerivedConstants& dc, i64 m) {
  using namespace checked;
  i64 total = 0;
  for (const auto& beta : classical_relative_maximals(dc, m)) {
    for (std::size_t r = 0; r < beta.size(); ++r) {
      i64 prod = 1;
      for (std::size_t s = 0; s < beta.size(); ++s)
        if (s != r) prod = mul(prod, beta[s]);
      total = add(total, prod);
    }
  }
  return total;
}

GapReport gap_report(const DerivedConstants& dc, i64 m, ScanOptions options) {
  GapReport report;
  report.gaps = gaps_via_complement(dc, m, options);
  report.pure_gaps = pure_gaps_via_witnesses(dc, m, options);
  report.gap_count = static_cast<i64>(report.gaps.size());
  report.pure_gap_count = static_cast<i64>(report.pure_gaps.size());
  report.cross_checks["gaps_route_agreement"] = gaps_via_relative_maximals(dc, m) == report.gaps;
  report.cross_checks["pure_gaps_route_agreement"] = pure_gaps_via_relative_maximals(dc, m) == report.pure_gaps;
  report.cross_checks["pure_gaps_subset"] =
      std::includes(report.gaps.begin(), report.gaps.end(), report.pure_gaps.begin(), report.pure_gaps.end());
  report.cross_checks["gap_count_bound"] = report.gap_count <= gap_count_upper_bound(dc, m);
  if (m == 1) report.cross_checks["two_point_count"] = count_two_point_gaps(dc) == report.gap_count;
  return report;
}

}  // namespace wsg
