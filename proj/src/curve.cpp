#include "wsg/curve.hpp"

#include <sstream>

#include "wsg/checked.hpp"
#include "wsg/error.hpp"

namespace wsg {

using checked::i64;

bool is_prime(i64 x) {
  if (x < 2) return false;
  for (i64 d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::optional<i64> prime_power_base(i64 x) {
  if (x < 2) return std::nullopt;
  i64 p = x;
  for (i64 d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      p = d;
      break;
    }
  }
  while (x % p == 0) x /= p;
  if (x != 1) return std::nullopt;
  return p;
}

namespace {

void require_positive(i64 v, const char* name) {
  if (v <= 0) throw Error(ErrorCode::NonPositive, std::string(name) + " must be a positive integer");
}

// Numerator and denominator of the genus formula. X:
//   (q^{n+2} - p^b q^n - s q^3 + q^2 + (s-1) p^b) / (2 s p^b)
// Y is the same expression with p^b = 1.
struct GenusFraction {
  i64 num;
  i64 den;
};

GenusFraction genus_fraction(i64 q, i64 pb, i64 n, i64 s) {
  using namespace checked;
  const i64 qn = pow(q, static_cast<unsigned>(n));
  i64 num = mul(qn, mul(q, q));
  num = sub(num, mul(pb, qn));
  num = sub(num, mul(s, pow(q, 3)));
  num = add(num, mul(q, q));
  num = add(num, mul(s - 1, pb));
  return {num, mul(2, mul(s, pb))};
}

}  // namespace

CurveParams validate_params(const RawParams& raw) {
  using namespace checked;
  CurveParams out;
  out.family = raw.family;
  require_positive(raw.n, "n");
  require_positive(raw.s, "s");
  if (raw.family == Family::X) {
    require_positive(raw.p, "p");
    require_positive(raw.a, "a");
    require_positive(raw.b, "b");
    if (!is_prime(raw.p)) throw Error(ErrorCode::NonPrimeP, "p = " + std::to_string(raw.p) + " is not prime");
    if (raw.a % raw.b != 0)
      throw Error(ErrorCode::BNotDividingA, "b = " + std::to_string(raw.b) + " does not divide a = " + std::to_string(raw.a));
    out.p = raw.p;
    out.a = raw.a;
    out.b = raw.b;
    out.q = pow(raw.p, static_cast<unsigned>(std::min<i64>(raw.a, 64)));
  } else {
    require_positive(raw.q, "q");
    if (!prime_power_base(raw.q)) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(raw.q) + " is not a prime power");
    out.q = raw.q;
  }
  if (raw.n % 2 == 0) throw Error(ErrorCode::NEven, "n = " + std::to_string(raw.n) + " must be odd");
  if (raw.n < 3) throw Error(ErrorCode::NTooSmall, "n = " + std::to_string(raw.n) + " must be at least 3");
  out.n = raw.n;
  out.s = raw.s;

  // Magnitudes up to q^{2n} (and q^{n+3}) must be representable.
  (void)pow(out.q, static_cast<unsigned>(std::max<i64>(2 * out.n, out.n + 3)));

  const i64 ratio = (pow(out.q, static_cast<unsigned>(out.n)) + 1) / (out.q + 1);
  if (ratio % out.s != 0)
    throw Error(ErrorCode::SNotDividing,
                "s = " + std::to_string(out.s) + " does not divide (q^n+1)/(q+1) = " + std::to_string(ratio));

  const i64 pb = out.family == Family::X ? pow(out.p, static_cast<unsigned>(out.b)) : 1;
  const auto g = genus_fraction(out.q, pb, out.n, out.s);
  if (g.num <= 0) throw Error(ErrorCode::GenusNotPositive, "genus evaluates to " + std::to_string(g.num / g.den) + " for " + describe(out));
  if (g.num % g.den != 0)
    throw Error(ErrorCode::InvariantViolation, "genus formula is not integral for " + describe(out));
  return out;
}

DerivedConstants derive(const CurveParams& params) {
  using namespace checked;
  DerivedConstants dc;
  dc.params = params;
  dc.q = params.q;
  dc.pb = params.family == Family::X ? pow(params.p, static_cast<unsigned>(params.b)) : 1;
  const i64 qn1 = add(pow(dc.q, static_cast<unsigned>(params.n)), 1);
  dc.M = qn1 / mul(params.s, dc.q + 1);
  dc.e = mul(dc.q + 1, dc.M);
  dc.max_m = dc.q / dc.pb;
  dc.y_pole = mul(dc.max_m, dc.M);
  dc.z_pole = pow(dc.q, 3) / dc.pb;
  const auto g = genus_fraction(dc.q, dc.pb, params.n, params.s);
  dc.genus = g.num / g.den;
  dc.canonical_degree = sub(mul(2, dc.genus), 2);
  dc.frobenius = add(dc.canonical_degree, 1);
  return dc;
}

DerivedConstants make_curve(const RawParams& raw) { return derive(validate_params(raw)); }

DerivedConstants make_x(i64 p, i64 a, i64 b, i64 n, i64 s) {
  return make_curve(RawParams{Family::X, p, a, b, 0, n, s});
}

DerivedConstants make_y(i64 q, i64 n, i64 s) { return make_curve(RawParams{Family::Y, 0, 0, 0, q, n, s}); }

std::string describe(const CurveParams& params) {
  std::ostringstream os;
  if (params.family == Family::X)
    os << "X(p=" << params.p << ",a=" << params.a << ",b=" << params.b << ",n=" << params.n << ",s=" << params.s << ")";
  else
    os << "Y(q=" << params.q << ",n=" << params.n << ",s=" << params.s << ")";
  return os.str();
}

void check_m(const DerivedConstants& dc, i64 m) {
  if (m < 1 || m > dc.max_m)
    throw Error(ErrorCode::BadM, "m = " + std::to_string(m) + " outside [1, " + std::to_string(dc.max_m) + "]");
}

MonomialValuation monomial_valuation(const DerivedConstants& dc, i64 m, const MonomialExponents& exps) {
  using namespace checked;
  check_m(dc, m);
  if (static_cast<i64>(exps.c.size()) != m)
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(m) + " exponents of x - alpha");

  // Order of vanishing at each P_l of z^{a_z} y^{b_y}, before the x factors.
  const i64 base = add(exps.a_z, mul(exps.b_y, dc.M));
  i64 sum_c = 0;
  for (auto c : exps.c) sum_c = add(sum_c, c);

  MonomialValuation out;
  out.vector = PointVector(static_cast<std::size_t>(m + 1));
  out.vector[0] = add(add(mul(exps.a_z, dc.z_pole), mul(exps.b_y, dc.y_pole)), mul(dc.e, sum_c));
  for (i64 l = 0; l < m; ++l) out.vector[l + 1] = -add(base, mul(exps.c[l], dc.e));
  // z vanishes at every affine point with z = 0; y at the max_m points with
  // y = 0, of which P_{m+1}, ..., P_{max_m} lie outside the tuple.
  out.regular = exps.a_z >= 0 && (m == dc.max_m || base >= 0);
  return out;
}

}  // namespace wsg
