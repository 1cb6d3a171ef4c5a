#pragma once

// Membership in the generalized Weierstrass semigroup H^(P_inf, P_1..P_m)
// and in its classical part H = H^ intersected with N_0^{m+1}.
//
// A vector alpha is a member iff for every coordinate r there is an
// absolute maximal element gamma with gamma_r = alpha_r and gamma <= alpha
// componentwise; alpha is then the lub of those witnesses. Witnesses are
// found by parameter forcing: for r >= 1 the residue alpha_r mod e fixes the
// family and index pair, for r = 0 the residue alpha_0 mod e narrows the
// candidates to those whose leading coordinate is congruent to it.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsg/curve.hpp"
#include "wsg/maximal_elements.hpp"
#include "wsg/point_vector.hpp"

namespace wsg {

PointVector lub(std::span<const PointVector> vectors);

// Which absolute-maximal families take part in membership decisions. Both
// are always on outside of mutation testing.
struct FamilySelection {
  bool absolute = true;
  bool translation = true;
};

struct MembershipVerdict {
  bool member = false;
  std::vector<MaximalElement> witnesses;  // one per coordinate when member
  // First coordinate without a witness, affine coordinates checked before
  // coordinate 0.
  std::optional<std::size_t> failing_coordinate;
};

class GeneralizedSemigroup {
 public:
  GeneralizedSemigroup(const DerivedConstants& dc, std::int64_t m, FamilySelection families = {});

  const DerivedConstants& constants() const noexcept { return dc_; }
  std::int64_t m() const noexcept { return m_; }

  // Lexicographically smallest (family, i, j, k) witness for coordinate r:
  // an absolute maximal gamma with gamma_r = alpha_r and gamma <= alpha.
  // The translation family sorts before every index pair.
  std::optional<MaximalElement> witness(const PointVector& alpha, std::size_t r) const;
  bool has_witness(const PointVector& alpha, std::size_t r) const;

  MembershipVerdict test(const PointVector& alpha) const;
  bool contains(const PointVector& alpha) const;
  // Member with all coordinates nonnegative.
  bool contains_classical(const PointVector& alpha) const;
  // No coordinate has a witness.
  bool is_pure_gap_candidate(const PointVector& alpha) const;

 private:
  struct Candidate {
    bool translation = false;
    IndexPair pair;
    std::int64_t leading = 0;  // first coordinate when every shift is zero
    std::int64_t residue = 0;  // affine coordinates when every shift is zero
  };

  void check_length(const PointVector& alpha) const;
  bool find(const PointVector& alpha, std::size_t r, MaximalElement* out) const;
  bool fits_at_affine(const PointVector& alpha, std::size_t r, const Candidate& c, MaximalElement* out) const;
  bool fits_at_infinity(const PointVector& alpha, const Candidate& c, MaximalElement* out) const;

  DerivedConstants dc_;
  std::int64_t m_;
  std::vector<Candidate> candidates_;
  std::vector<int> by_residue_;                 // residue -> candidate index or -1
  std::vector<std::vector<int>> by_leading_;    // leading mod e -> candidate indices
};

std::optional<MaximalElement> coordinate_witness(const DerivedConstants& dc, std::int64_t m, const PointVector& alpha,
                                                 std::size_t r);
MembershipVerdict in_generalized_semigroup(const DerivedConstants& dc, std::int64_t m, const PointVector& alpha);
bool in_weierstrass_semigroup(const DerivedConstants& dc, std::int64_t m, const PointVector& alpha);

// Gap sequence of the one-point semigroup H(P_1), read off from the
// two-point semigroup: b is a gap iff no absolute maximal element has second
// coordinate b and first coordinate <= 0. Scans [0, 2g].
std::vector<std::int64_t> one_point_gaps_at_affine_point(const DerivedConstants& dc);

}  // namespace wsg
