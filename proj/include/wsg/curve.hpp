#pragma once

// Curve families X_{a,b,n,s} and Y_{n,s}, their derived constants and the
// valuation tables of the generating functions z, y and x - alpha at the
// points (P_inf, P_1, ..., P_m).
//
// Affine points are symbolic: P_l stands for the point (alpha_l, 0, 0) and
// only the multiplicities of the principal divisors are modelled.
//
//   (x - alpha_l) = e P_l           - e P_inf          e = (q+1)M
//   (y)           = M sum_i P_i     - (q/p^b) M P_inf  over the q/p^b points with y = 0
//   (z)           = sum of all affine points with z = 0, each once,  - (q^3/p^b) P_inf
//
// Y_{n,s} is handled as X with p^b = 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsg/point_vector.hpp"

namespace wsg {

enum class Family { X, Y };

struct CurveParams {
  Family family = Family::Y;
  // p, a, b are meaningful for family X only.
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

// Unvalidated user input. For X, q is ignored and computed as p^a; for Y,
// p/a/b are ignored.
struct RawParams {
  Family family = Family::Y;
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
};

struct DerivedConstants {
  CurveParams params;
  std::int64_t q = 0;
  std::int64_t pb = 1;             // p^b for X, 1 for Y
  std::int64_t M = 0;              // (q^n + 1) / (s (q + 1)), the exponent of z
  std::int64_t e = 0;              // (q + 1) M, pole order of x at P_inf
  std::int64_t y_pole = 0;         // (q / p^b) M
  std::int64_t z_pole = 0;         // q^3 / p^b
  std::int64_t genus = 0;
  std::int64_t frobenius = 0;      // 2g - 1
  std::int64_t canonical_degree = 0;  // 2g - 2
  std::int64_t max_m = 0;          // number of affine points with y = 0: q / p^b

  // Generators of H(P_inf), in the order (y_pole, z_pole, e). Not reduced.
  std::vector<std::int64_t> generators() const { return {y_pole, z_pole, e}; }
};

bool is_prime(std::int64_t x);
// Returns the prime p with x = p^k (k >= 1), or nullopt.
std::optional<std::int64_t> prime_power_base(std::int64_t x);

CurveParams validate_params(const RawParams& raw);
DerivedConstants derive(const CurveParams& params);

// Convenience: validate then derive.
DerivedConstants make_curve(const RawParams& raw);
DerivedConstants make_x(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t s);
DerivedConstants make_y(std::int64_t q, std::int64_t n, std::int64_t s);

std::string describe(const CurveParams& params);

// Throws BadM unless 1 <= m <= max_m.
void check_m(const DerivedConstants& dc, std::int64_t m);

// Exponents of z^{a_z} y^{b_y} prod_l (x - alpha_l)^{c_l}, l = 1..m.
struct MonomialExponents {
  std::int64_t a_z = 0;
  std::int64_t b_y = 0;
  std::vector<std::int64_t> c;
};

struct MonomialValuation {
  PointVector vector;  // (-v_{P_inf}, -v_{P_1}, ..., -v_{P_m})
  bool regular = false;  // no poles outside {P_inf, P_1, ..., P_m}
};

MonomialValuation monomial_valuation(const DerivedConstants& dc, std::int64_t m, const MonomialExponents& exps);

}  // namespace wsg
