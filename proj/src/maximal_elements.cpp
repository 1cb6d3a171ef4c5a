#include "wsg/maximal_elements.hpp"

#include "wsg/checked.hpp"
#include "wsg/error.hpp"

namespace wsg {

using checked::i64;

void check_index_pair(const DerivedConstants& dc, IndexPair ip) {
  const bool in_range = ip.i >= 0 && ip.i <= dc.q && ip.j >= 1 && ip.j <= dc.M;
  if (!in_range || (ip.i == dc.q && ip.j == dc.M))
    throw Error(ErrorCode::BadIndexPair, "(" + std::to_string(ip.i) + "," + std::to_string(ip.j) + ") is not a valid index pair");
}

std::vector<IndexPair> index_pairs(const DerivedConstants& dc) {
  std::vector<IndexPair> out;
  out.reserve(static_cast<std::size_t>(dc.e - 1));
  for (i64 i = 0; i <= dc.q; ++i)
    for (i64 j = 1; j <= dc.M; ++j)
      if (!(i == dc.q && j == dc.M)) out.push_back({i, j});
  return out;
}

i64 residue_of(const DerivedConstants& dc, IndexPair ip) { return ip.i * dc.M + ip.j; }

IndexPair index_pair_of(const DerivedConstants& dc, i64 rho) {
  if (rho < 1 || rho >= dc.e) throw Error(ErrorCode::BadIndexPair, "residue " + std::to_string(rho) + " outside [1, e-1]");
  const i64 i = checked::ceil_div(rho, dc.M) - 1;
  return {i, rho - i * dc.M};
}

std::string to_string(MaximalElement::Kind kind) {
  switch (kind) {
    case MaximalElement::Kind::Absolute: return "absolute";
    case MaximalElement::Kind::Translation: return "translation";
    case MaximalElement::Kind::Relative: return "relative";
    case MaximalElement::Kind::RelativeZero: return "relative_zero";
  }
  return "unknown";
}

namespace {

// q^2 e / p^b
i64 top(const DerivedConstants& dc) { return checked::mul(checked::mul(dc.q, dc.q + 1), dc.y_pole); }

// top - (count) e - i y_pole - j z_pole
i64 leading(const DerivedConstants& dc, i64 count, IndexPair ip) {
  using namespace checked;
  return sub(sub(sub(top(dc), mul(count, dc.e)), mul(ip.i, dc.y_pole)), mul(ip.j, dc.z_pole));
}

}  // namespace

PointVector realize(const DerivedConstants& dc, i64 m, const MaximalElement& element) {
  using namespace checked;
  using Kind = MaximalElement::Kind;
  check_m(dc, m);
  if (static_cast<i64>(element.shifts.size()) != m)
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(m) + " shifts");
  const bool has_pair = element.kind == Kind::Absolute || element.kind == Kind::Relative;
  if (has_pair) check_index_pair(dc, element.pair);

  i64 shift_sum = 0;
  for (auto k : element.shifts) shift_sum = add(shift_sum, k);
  const i64 rho = has_pair ? residue_of(dc, element.pair) : 0;

  PointVector v(static_cast<std::size_t>(m + 1));
  switch (element.kind) {
    case Kind::Absolute: v[0] = leading(dc, add(m, shift_sum), element.pair); break;
    case Kind::Relative: v[0] = leading(dc, add(1, shift_sum), element.pair); break;
    case Kind::Translation: v[0] = -mul(shift_sum, dc.e); break;
    case Kind::RelativeZero: v[0] = mul(sub(m - 1, shift_sum), dc.e); break;
  }
  for (i64 l = 0; l < m; ++l) v[l + 1] = add(mul(element.shifts[l], dc.e), rho);
  return v;
}

PointVector region_generator(const DerivedConstants& dc, i64 m, IndexPair ip) {
  return realize(dc, m, MaximalElement::absolute(ip, std::vector<i64>(m, 0)));
}

std::vector<PointVector> absolute_maximals_in_region(const DerivedConstants& dc, i64 m) {
  check_m(dc, m);
  std::vector<PointVector> out{PointVector(static_cast<std::size_t>(m + 1))};
  for (auto ip : index_pairs(dc)) out.push_back(region_generator(dc, m, ip));
  canonicalize(out);
  return out;
}

std::vector<PointVector> relative_maximals_in_region(const DerivedConstants& dc, i64 m) {
  check_m(dc, m);
  const std::vector<i64> zeros(m, 0);
  std::vector<PointVector> out{realize(dc, m, MaximalElement::relative_zero(zeros))};
  for (auto ip : index_pairs(dc)) out.push_back(realize(dc, m, MaximalElement::relative(ip, zeros)));
  canonicalize(out);
  return out;
}

i64 shift_bound(const DerivedConstants& dc, IndexPair ip) {
  check_index_pair(dc, ip);
  // First coordinate of the relative element is leading(1 + S) >= 0.
  return checked::floor_div(leading(dc, 1, ip), dc.e);
}

void for_each_bounded_composition(i64 parts, i64 max_sum, const std::function<void(std::span<const i64>)>& fn) {
  if (max_sum < 0) return;
  std::vector<i64> k(static_cast<std::size_t>(parts), 0);
  if (parts == 0) {
    fn(k);
    return;
  }
  i64 sum = 0;
  while (true) {
    fn(k);
    // Odometer with the last coordinate fastest, constrained by the sum.
    i64 pos = parts - 1;
    while (pos >= 0) {
      if (sum < max_sum) {
        ++k[pos];
        ++sum;
        break;
      }
      sum -= k[pos];
      k[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

std::vector<PointVector> minimal_generating_set(const DerivedConstants& dc, i64 m) {
  check_m(dc, m);
  std::vector<PointVector> out{PointVector(static_cast<std::size_t>(m + 1))};
  for (auto ip : index_pairs(dc)) {
    // Nonnegative affine coordinates force k >= 0; the first coordinate
    // bounds the shift sum.
    const i64 bound = checked::floor_div(leading(dc, m, ip), dc.e);
    for_each_bounded_composition(m, bound, [&](std::span<const i64> ks) {
      out.push_back(realize(dc, m, MaximalElement::absolute(ip, {ks.begin(), ks.end()})));
    });
  }
  canonicalize(out);
  return out;
}

std::vector<PointVector> classical_relative_maximals(const DerivedConstants& dc, i64 m) {
  check_m(dc, m);
  std::vector<PointVector> out;
  for (auto ip : index_pairs(dc)) {
    for_each_bounded_composition(m, shift_bound(dc, ip), [&](std::span<const i64> ks) {
      out.push_back(realize(dc, m, MaximalElement::relative(ip, {ks.begin(), ks.end()})));
    });
  }
  for_each_bounded_composition(m, m - 1, [&](std::span<const i64> ks) {
    out.push_back(realize(dc, m, MaximalElement::relative_zero({ks.begin(), ks.end()})));
  });
  canonicalize(out);
  return out;
}

i64 count_classical_relative_maximals(const DerivedConstants& dc, i64 m) {
  using namespace checked;
  check_m(dc, m);
  // Number of k in N_0^m with sum <= t is C(t + m, m).
  i64 total = binomial(2 * m - 1, m);
  for (auto ip : index_pairs(dc)) {
    const i64 t = shift_bound(dc, ip);
    if (t >= 0) total = add(total, binomial(add(t, m), m));
  }
  return total;
}

}  // namespace wsg
