#include "wsg/oracle.hpp"

#include <algorithm>

#include "wsg/checked.hpp"
#include "wsg/error.hpp"
#include "wsg/maximal_elements.hpp"

namespace wsg {

using checked::i64;

bool Box::contains(const PointVector& v) const {
  if (v.size() != lower.size()) return false;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] < lower[k] || v[k] > upper[k]) return false;
  return true;
}

void check_box(const Box& box) {
  if (box.lower.size() != box.upper.size() || box.lower.size() == 0)
    throw Error(ErrorCode::BadBox, "box bounds have mismatched or zero length");
  if (!box.lower.dominated_by(box.upper)) throw Error(ErrorCode::BadBox, "box lower bound exceeds upper bound");
}

Box symmetric_box(std::size_t dim, i64 bound) {
  return {PointVector(dim, -bound), PointVector(dim, bound)};
}

std::vector<PointVector> monomial_vectors_in_box(const DerivedConstants& dc, i64 m, const Box& box, i64 range_slack) {
  using namespace checked;
  check_m(dc, m);
  check_box(box);
  if (static_cast<i64>(box.lower.size()) != m + 1) throw Error(ErrorCode::BadBox, "box dimension must be m + 1");

  std::vector<PointVector> out;
  const i64 upper_degree = box.upper.degree();
  if (upper_degree < 0 && range_slack == 0) return out;

  const i64 a_max = floor_div(mul(std::max<i64>(upper_degree, 0), dc.pb), dc.q * dc.q * dc.q - dc.q) + range_slack;
  const bool all_points = m == dc.max_m;
  // Degree contributions per unit of a_z and b_y.
  const i64 per_a = dc.z_pole - m;
  const i64 per_b = mul(dc.M, dc.max_m - m);

  MonomialExponents exps;
  exps.c.assign(static_cast<std::size_t>(m), 0);
  std::vector<i64> c_lo(m), c_hi(m);
  for (i64 a = 0; a <= a_max; ++a) {
    i64 b_lo, b_hi;
    if (all_points) {
      b_lo = -range_slack;
      b_hi = dc.q + range_slack;
    } else {
      b_lo = ceil_div(-a, dc.M) - range_slack;
      b_hi = floor_div(sub(upper_degree, mul(a, per_a)), per_b) + range_slack;
    }
    for (i64 b = b_lo; b <= b_hi; ++b) {
      const i64 base = add(a, mul(b, dc.M));
      bool empty = false;
      for (i64 l = 0; l < m; ++l) {
        c_lo[l] = ceil_div(sub(-box.upper[l + 1], base), dc.e) - range_slack;
        c_hi[l] = floor_div(sub(-box.lower[l + 1], base), dc.e) + range_slack;
        if (c_lo[l] > c_hi[l]) empty = true;
      }
      if (empty) continue;
      exps.a_z = a;
      exps.b_y = b;
      exps.c = c_lo;
      while (true) {
        auto val = monomial_valuation(dc, m, exps);
        if (val.regular && box.contains(val.vector)) out.push_back(std::move(val.vector));
        i64 pos = m - 1;
        while (pos >= 0) {
          if (++exps.c[pos] <= c_hi[pos]) break;
          exps.c[pos] = c_lo[pos];
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
  canonicalize(out);
  return out;
}

namespace {

constexpr i64 kMaxGridCells = i64{1} << 27;

struct Grid {
  std::vector<i64> extent;
  std::vector<i64> stride;
  i64 cells = 1;

  explicit Grid(const Box& box) {
    const std::size_t dim = box.lower.size();
    extent.resize(dim);
    stride.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      extent[k] = checked::add(checked::sub(box.upper[k], box.lower[k]), 1);
      cells = checked::mul(cells, extent[k]);
      if (cells > kMaxGridCells) throw Error(ErrorCode::TooLarge, "closure box has too many cells");
    }
    i64 s = 1;
    for (std::size_t k = dim; k-- > 0;) {
      stride[k] = s;
      s *= extent[k];
    }
  }

  i64 index(const PointVector& v, const PointVector& lower) const {
    i64 idx = 0;
    for (std::size_t k = 0; k < v.size(); ++k) idx += (v[k] - lower[k]) * stride[k];
    return idx;
  }

  // work[x + e_axis] |= work[x] along the whole axis.
  void propagate_up(std::vector<std::uint8_t>& work, std::size_t axis) const {
    const i64 s = stride[axis];
    const i64 block = s * extent[axis];
    for (i64 base = 0; base < cells; base += block)
      for (i64 k = 1; k < extent[axis]; ++k) {
        std::uint8_t* cur = work.data() + base + k * s;
        const std::uint8_t* prev = cur - s;
        for (i64 x = 0; x < s; ++x) cur[x] |= prev[x];
      }
  }
};

}  // namespace

std::vector<PointVector> lub_closure(std::span<const PointVector> points, const Box& box) {
  check_box(box);
  for (const auto& p : points)
    if (!box.contains(p)) throw Error(ErrorCode::BadBox, "point outside the closure box");

  // alpha is the lub of a subset of `points` iff for every coordinate r some
  // point s <= alpha has s_r = alpha_r. For each r, mark the points and
  // propagate upward along every other axis; alpha survives all r.
  const Grid grid(box);
  const std::size_t dim = box.lower.size();
  std::vector<std::uint8_t> result(static_cast<std::size_t>(grid.cells), 1);
  std::vector<std::uint8_t> work(static_cast<std::size_t>(grid.cells));
  for (std::size_t r = 0; r < dim; ++r) {
    std::fill(work.begin(), work.end(), 0);
    for (const auto& p : points) work[static_cast<std::size_t>(grid.index(p, box.lower))] = 1;
    for (std::size_t t = 0; t < dim; ++t)
      if (t != r) grid.propagate_up(work, t);
    for (std::size_t x = 0; x < result.size(); ++x) result[x] &= work[x];
  }

  std::vector<PointVector> out;
  PointVector v(dim);
  for (i64 idx = 0; idx < grid.cells; ++idx) {
    if (!result[static_cast<std::size_t>(idx)]) continue;
    i64 rest = idx;
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = box.lower[k] + rest / grid.stride[k];
      rest %= grid.stride[k];
    }
    out.push_back(v);
  }
  return out;  // flat order is lexicographic
}

namespace {

// Absolute maximal family vectors (all index pairs and the translation
// family) whose affine coordinates and first coordinate lie in the box.
std::vector<PointVector> absolute_family_in_box(const DerivedConstants& dc, i64 m, const Box& box) {
  using namespace checked;
  std::vector<PointVector> out;
  auto scan = [&](const MaximalElement& proto, i64 residue) {
    std::vector<i64> lo(m), hi(m);
    for (i64 l = 0; l < m; ++l) {
      lo[l] = ceil_div(sub(box.lower[l + 1], residue), dc.e);
      hi[l] = floor_div(sub(box.upper[l + 1], residue), dc.e);
      if (lo[l] > hi[l]) return;
    }
    MaximalElement el = proto;
    el.shifts = lo;
    while (true) {
      auto v = realize(dc, m, el);
      if (box.contains(v)) out.push_back(std::move(v));
      i64 pos = m - 1;
      while (pos >= 0) {
        if (++el.shifts[pos] <= hi[pos]) break;
        el.shifts[pos] = lo[pos];
        --pos;
      }
      if (pos < 0) break;
    }
  };
  scan(MaximalElement::translation({}), 0);
  for (auto ip : index_pairs(dc)) scan(MaximalElement::absolute(ip, {}), residue_of(dc, ip));
  return out;
}

}  // namespace

std::map<std::string, bool> consistency_report(const DerivedConstants& dc, i64 m, i64 sum_bound,
                                               FamilySelection families, ScanOptions options) {
  check_m(dc, m);
  if (sum_bound < 0) throw Error(ErrorCode::BadBox, "negative sum bound");
  std::map<std::string, bool> checks;
  const auto dim = static_cast<std::size_t>(m + 1);
  const Box box = symmetric_box(dim, sum_bound);

  const auto monomials = monomial_vectors_in_box(dc, m, box);
  const auto closure = lub_closure(monomials, box);

  std::vector<PointVector> closure_simplex;
  for (const auto& v : closure)
    if (v.nonnegative() && v.degree() <= sum_bound) closure_simplex.push_back(v);

  const GeneralizedSemigroup hs(dc, m, families);
  std::vector<PointVector> member_simplex;
  for_each_in_simplex(dim, sum_bound, [&](const PointVector& alpha) {
    if (hs.contains(alpha)) member_simplex.push_back(alpha);
  });
  checks["closure_matches_membership"] = closure_simplex == member_simplex;

  bool formula_ok = true;
  auto in_closure = [&](const PointVector& v) { return std::binary_search(closure.begin(), closure.end(), v); };
  for (const auto& v : absolute_family_in_box(dc, m, box)) formula_ok = formula_ok && in_closure(v);
  for (const auto& v : classical_relative_maximals(dc, m))
    if (v.degree() <= sum_bound) formula_ok = formula_ok && in_closure(v);
  checks["formula_elements_in_closure"] = formula_ok;

  checks["monomials_are_members"] =
      std::all_of(monomials.begin(), monomials.end(), [&](const PointVector& v) { return hs.contains(v); });

  checks["region_size"] = static_cast<i64>(absolute_maximals_in_region(dc, m).size()) == dc.e;

  const auto report = gap_report(dc, m, options);
  for (const auto& [name, ok] : report.cross_checks) checks[name] = ok;

  checks["relative_maximal_count"] =
      count_classical_relative_maximals(dc, m) == static_cast<i64>(classical_relative_maximals(dc, m).size());
  return checks;
}

bool all_passed(const std::map<std::string, bool>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

}  // namespace wsg
