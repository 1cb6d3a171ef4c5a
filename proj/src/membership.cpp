#include "wsg/membership.hpp"

#include <algorithm>

#include "wsg/checked.hpp"
#include "wsg/error.hpp"

namespace wsg {

using checked::i64;

PointVector lub(std::span<const PointVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::EmptyInput, "lub of an empty set");
  PointVector out = vectors.front();
  for (const auto& v : vectors.subspan(1)) {
    if (v.size() != out.size()) throw Error(ErrorCode::LengthMismatch, "lub of vectors of different length");
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(out[k], v[k]);
  }
  return out;
}

GeneralizedSemigroup::GeneralizedSemigroup(const DerivedConstants& dc, i64 m, FamilySelection families)
    : dc_(dc), m_(m) {
  check_m(dc, m);
  if (families.translation) candidates_.push_back({true, {}, 0, 0});
  if (families.absolute) {
    for (auto ip : index_pairs(dc)) {
      const auto v = region_generator(dc, m, ip);
      candidates_.push_back({false, ip, v[0], residue_of(dc, ip)});
    }
  }
  by_residue_.assign(static_cast<std::size_t>(dc.e), -1);
  by_leading_.resize(static_cast<std::size_t>(dc.e));
  for (std::size_t idx = 0; idx < candidates_.size(); ++idx) {
    const auto& c = candidates_[idx];
    by_residue_[static_cast<std::size_t>(c.residue)] = static_cast<int>(idx);
    by_leading_[static_cast<std::size_t>(checked::mod(c.leading, dc.e))].push_back(static_cast<int>(idx));
  }
}

void GeneralizedSemigroup::check_length(const PointVector& alpha) const {
  if (static_cast<i64>(alpha.size()) != m_ + 1)
    throw Error(ErrorCode::LengthMismatch, "expected a vector of length " + std::to_string(m_ + 1));
}

bool GeneralizedSemigroup::fits_at_affine(const PointVector& alpha, std::size_t r, const Candidate& c,
                                          MaximalElement* out) const {
  using namespace checked;
  const i64 e = dc_.e;
  const i64 fixed = sub(alpha[r], c.residue) / e;  // exact: residue matches
  // Largest shift keeping each remaining affine coordinate <= alpha_t.
  i64 free_max = 0;
  for (std::size_t t = 1; t < alpha.size(); ++t)
    if (t != r) free_max = add(free_max, floor_div(sub(alpha[t], c.residue), e));
  // The first coordinate is leading - S e, decreasing in the shift sum S.
  const i64 needed = ceil_div(sub(c.leading, alpha[0]), e);
  if (add(fixed, free_max) < needed) return false;
  if (out) {
    std::vector<i64> ks(alpha.size() - 1);
    bool first_free = true;
    for (std::size_t t = 1; t < alpha.size(); ++t) {
      const i64 cap = floor_div(alpha[t] - c.residue, e);
      if (t == r) {
        ks[t - 1] = fixed;
      } else if (first_free) {
        // Smallest value that still lets the remaining shifts, at their
        // caps, reach the required sum.
        ks[t - 1] = std::min(cap, needed - fixed - (free_max - cap));
        first_free = false;
      } else {
        ks[t - 1] = cap;
      }
    }
    *out = c.translation ? MaximalElement::translation(std::move(ks)) : MaximalElement::absolute(c.pair, std::move(ks));
  }
  return true;
}

bool GeneralizedSemigroup::fits_at_infinity(const PointVector& alpha, const Candidate& c, MaximalElement* out) const {
  using namespace checked;
  const i64 e = dc_.e;
  const i64 shift_sum = sub(c.leading, alpha[0]) / e;  // exact: leading residue matches
  i64 free_max = 0;
  for (std::size_t t = 1; t < alpha.size(); ++t) free_max = add(free_max, floor_div(sub(alpha[t], c.residue), e));
  if (free_max < shift_sum) return false;
  if (out) {
    std::vector<i64> ks(alpha.size() - 1);
    for (std::size_t t = 1; t < alpha.size(); ++t) ks[t - 1] = floor_div(alpha[t] - c.residue, e);
    ks[0] -= free_max - shift_sum;
    *out = c.translation ? MaximalElement::translation(std::move(ks)) : MaximalElement::absolute(c.pair, std::move(ks));
  }
  return true;
}

bool GeneralizedSemigroup::find(const PointVector& alpha, std::size_t r, MaximalElement* out) const {
  check_length(alpha);
  if (r > static_cast<std::size_t>(m_)) throw Error(ErrorCode::BadM, "coordinate index out of range");
  const i64 e = dc_.e;
  if (r >= 1) {
    const int idx = by_residue_[static_cast<std::size_t>(checked::mod(alpha[r], e))];
    return idx >= 0 && fits_at_affine(alpha, r, candidates_[static_cast<std::size_t>(idx)], out);
  }
  for (int idx : by_leading_[static_cast<std::size_t>(checked::mod(alpha[0], e))])
    if (fits_at_infinity(alpha, candidates_[static_cast<std::size_t>(idx)], out)) return true;
  return false;
}

std::optional<MaximalElement> GeneralizedSemigroup::witness(const PointVector& alpha, std::size_t r) const {
  MaximalElement w;
  if (!find(alpha, r, &w)) return std::nullopt;
  return w;
}

bool GeneralizedSemigroup::has_witness(const PointVector& alpha, std::size_t r) const {
  return find(alpha, r, nullptr);
}

MembershipVerdict GeneralizedSemigroup::test(const PointVector& alpha) const {
  check_length(alpha);
  // Affine coordinates first: their witnesses are forced by a single
  // residue, so a failure there is the more specific report.
  MembershipVerdict verdict;
  std::vector<MaximalElement> ws(alpha.size());
  for (std::size_t step = 1; step <= alpha.size(); ++step) {
    const std::size_t r = step % alpha.size();
    auto w = witness(alpha, r);
    if (!w) {
      verdict.failing_coordinate = r;
      return verdict;
    }
    ws[r] = std::move(*w);
  }
  verdict.member = true;
  verdict.witnesses = std::move(ws);
  return verdict;
}

bool GeneralizedSemigroup::contains(const PointVector& alpha) const {
  check_length(alpha);
  for (std::size_t r = 0; r < alpha.size(); ++r)
    if (!find(alpha, r, nullptr)) return false;
  return true;
}

bool GeneralizedSemigroup::contains_classical(const PointVector& alpha) const {
  return alpha.nonnegative() && contains(alpha);
}

bool GeneralizedSemigroup::is_pure_gap_candidate(const PointVector& alpha) const {
  for (std::size_t r = 0; r < alpha.size(); ++r)
    if (find(alpha, r, nullptr)) return false;
  check_length(alpha);
  return true;
}

std::optional<MaximalElement> coordinate_witness(const DerivedConstants& dc, i64 m, const PointVector& alpha,
                                                 std::size_t r) {
  return GeneralizedSemigroup(dc, m).witness(alpha, r);
}

MembershipVerdict in_generalized_semigroup(const DerivedConstants& dc, i64 m, const PointVector& alpha) {
  return GeneralizedSemigroup(dc, m).test(alpha);
}

bool in_weierstrass_semigroup(const DerivedConstants& dc, i64 m, const PointVector& alpha) {
  return GeneralizedSemigroup(dc, m).contains_classical(alpha);
}

std::vector<i64> one_point_gaps_at_affine_point(const DerivedConstants& dc) {
  const GeneralizedSemigroup hs(dc, 1);
  std::vector<i64> gaps;
  for (i64 b = 0; b <= 2 * dc.genus; ++b)
    if (!hs.has_witness(PointVector{0, b}, 1)) gaps.push_back(b);
  return gaps;
}

}  // namespace wsg
